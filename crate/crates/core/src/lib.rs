//! Normal forms, conjugacy invariants, translation numbers and periodic
//! elements for groups given by a finite Garside structure.
//!
//! A [`StructureTable`] holds the simples of a Garside monoid and every
//! table derived from them. [`Element`]s of the group live in left normal
//! form over a shared table.
//!
//! ```
//! use garside::{braid_classical, Element};
//!
//! let b3 = braid_classical(3).unwrap();
//! let g = Element::parse(&b3, "s1 s2").unwrap();
//! assert_eq!(g.power(3), Element::delta_power(&b3, 2));
//! ```

pub mod cli;
pub mod conjugacy;
pub mod element;
pub mod error;
pub mod format;
pub mod instances;
pub mod periodicity;
pub mod quotient;
pub mod structure;
pub mod word;

pub use conjugacy::{
    conjugate_to_delta_power, cycling, decycling, is_conjugate, summit_invariants, super_summit_set,
    super_summit_set_with_conjugators, SummitData, DEFAULT_CAP,
};
pub use element::{divisor_sets, lattice_ops, Element};
pub use error::{GarsideError, MalformedError, ParseError, Result};
pub use format::{load_structure, parse_raw, serialize, serialize_raw};
pub use instances::{braid_classical, braid_raw, free_abelian, free_abelian_raw, torus, torus_raw, InstanceSpec};
pub use periodicity::{
    commensurable, delta_root_certificate, garside_element_from_central, gcd_periodic_exponent, is_central,
    is_garside_element, is_periodic, lens_profile, periodicity_class, positive_divisors, translation_numbers,
    GcdCertificate, PeriodicityReport, Rational, RootCertificate, TranslationData,
};
pub use quotient::{
    certify_cyclic, coset_representative, enumerate_type_i, group_by_conjugacy, inf_additivity_check,
    quotient_closure, quotient_order, QuotientOrder, TypeIGenerator,
};
pub use structure::{validate_structure, RawStructure, Side, SimpleId, StructureTable, ValidationReport, Violation};
pub use word::Word;
