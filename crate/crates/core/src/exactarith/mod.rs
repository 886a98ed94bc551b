//! Exact rationals, cyclotomic scalars and quaternions over them.

pub mod cyclotomic;
pub mod parse;
pub mod quaternion;
pub mod rational;

pub use cyclotomic::{CyclotomicField, FieldScalar};
pub use parse::parse_quaternion;
pub use quaternion::Quaternion;
pub use rational::{int, rat, Rational};

/// `zeta_m^k` as a reduced scalar of conductor `m`.
pub fn field_embed_root_of_unity(m: u64, k: i64) -> FieldScalar {
    FieldScalar::root_of_unity(m, k)
}

pub fn quat_mul(p: &Quaternion, q: &Quaternion) -> crate::Result<Quaternion> {
    p.try_mul(q)
}

pub fn quat_inverse(q: &Quaternion) -> crate::Result<Quaternion> {
    q.inverse()
}

pub fn quat_is_unit(q: &Quaternion) -> bool {
    q.is_unit()
}
