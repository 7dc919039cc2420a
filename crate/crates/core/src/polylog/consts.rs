/// Apéry's constant ζ(3).
pub fn zeta3() -> f64 {
    1.202_056_903_159_594_3
}

/// Catalan's constant G = Cl₂(π/2).
pub fn catalan() -> f64 {
    0.915_965_594_177_219_015_054_6
}

/// Gieseking's constant Cl₂(π/3).
pub fn gieseking() -> f64 {
    1.014_941_606_409_653_625_021
}
