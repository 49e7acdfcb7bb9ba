//! The worked examples, bundled as facet-list text so every check can run
//! from a fresh checkout.

use crate::complex::Complex;
use crate::face::Face;
use crate::homology::FieldSpec;
use crate::io::{parse_complex, parse_sections, parse_shelled_over};
use crate::shelling::ShelledOverCertificate;

pub const RP2: &str = include_str!("../paper-data/rp2.cplx");
pub const RP2_COMPLEMENT: &str = include_str!("../paper-data/rp2-complement.cplx");
pub const GAMMA: &str = include_str!("../paper-data/gamma.cplx");
pub const DELTA1: &str = include_str!("../paper-data/delta1.cplx");
pub const DELTA2: &str = include_str!("../paper-data/delta2.cplx");
pub const DELTA2_SHELLING: &str = include_str!("../paper-data/delta2.order");
pub const DELTA1_SHELLED_OVER: &str = include_str!("../paper-data/delta1-shelled-over.cert");
pub const DELTA2_SHELLED_OVER: &str = include_str!("../paper-data/delta2-shelled-over.cert");
pub const LINK_COUNTEREXAMPLE: &str = include_str!("../paper-data/link-counterexample.cplx");

fn load(text: &str) -> Complex {
    parse_complex(text).expect("bundled data parses").complex
}

/// The 10-facet projective plane `T` on `[6]`.
pub fn rp2() -> Complex {
    load(RP2)
}

pub fn rp2_complement() -> Complex {
    load(RP2_COMPLEMENT)
}

/// The cone `Γ` on `[8]`.
pub fn gamma() -> Complex {
    load(GAMMA)
}

pub fn delta1() -> Complex {
    load(DELTA1)
}

pub fn delta2() -> Complex {
    load(DELTA2)
}

pub fn link_counterexample() -> Complex {
    load(LINK_COUNTEREXAMPLE)
}

/// Shelling of `Δ₂`, `F_0` first.
pub fn delta2_shelling() -> Vec<Face> {
    parse_sections(DELTA2_SHELLING).expect("bundled data parses").order
}

pub fn delta1_shelled_over(field: FieldSpec) -> ShelledOverCertificate {
    parse_shelled_over(DELTA1_SHELLED_OVER, 8, field).expect("bundled data parses")
}

/// The sequence printed for `Δ₂` over `Γ`, read as a certificate.
pub fn delta2_shelled_over(field: FieldSpec) -> ShelledOverCertificate {
    parse_shelled_over(DELTA2_SHELLED_OVER, 8, field).expect("bundled data parses")
}
