//! Exact computational algebra for symmetric-group representation lattices:
//! integral Smith forms, small symmetric groups and their distinguished
//! subgroups, integral G-modules with their canonical self-dual pairings,
//! group cohomology in low degrees by several independent methods, the
//! arithmetic of symplectic scalar endomorphisms, and the exact numerology of
//! semi-homogeneous bundle invariants.
//!
//! Every computation is exact: arbitrary-precision integers, residue rings,
//! and rational numbers only.
//!
//! The `examples/` directory is the front door; each file is runnable with
//! `cargo run --example <name>`:
//!
//! * `smith_form` - Smith decompositions, cokernels, kernels mod m
//! * `group_tables` - symmetric groups, Sylow and point-stabilizer subgroups
//! * `standard_modules` - the standard lattice, its dual, and the pairing
//!   between them
//! * `fixed_points` - invariants of lattices under the symmetric action
//! * `bar_cohomology` - cohomology from the normalized bar resolution
//! * `cyclic_oracle` - closed-form cohomology of cyclic groups
//! * `transfer` - restriction and corestriction on degree-one classes
//! * `stable_elements` - p-parts of cohomology through a Sylow subgroup
//! * `coxeter_cocycle` - extending generator assignments to cocycles
//! * `torsors` - finite equivariant torsors and their classes
//! * `hecke_witnesses` - symplectic scalar witnesses and Hecke matrices
//! * `semihom_numbers` - rank ledgers, kernel counts, strict partitions

pub mod exactlin;
