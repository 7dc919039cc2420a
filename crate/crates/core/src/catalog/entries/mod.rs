mod applications;
mod areas;
mod complex;
mod foundations;
mod golden;
mod ladders;

use super::IdentityEntry;

pub(crate) fn all() -> Vec<IdentityEntry> {
    let mut v = foundations::entries();
    v.extend(golden::entries());
    v.extend(ladders::entries());
    v.extend(complex::entries());
    v.extend(areas::entries());
    v.extend(applications::entries());
    v
}
