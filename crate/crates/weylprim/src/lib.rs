//! Exact-arithmetic tools for Weyl modules of the special linear group in
//! positive characteristic.
//!
//! The crate works with the type `A_{n-1}` weight lattice throughout.  It
//! provides:
//!
//! * [`root_weight`]: integral weights in the fundamental-weight basis,
//!   positive roots as intervals of simple roots, pairings, the duality
//!   twist, and the staircase weight sets `E(n, k)`.
//! * [`gfp_linalg`]: sparse exact vectors over the integers and over
//!   `GF(p)`, with deterministic Gaussian elimination (rank, kernel, span
//!   growth).
//! * [`jantzen`]: the root-by-root simplicity criterion for a Weyl module
//!   `Delta(w)` in characteristic `p`, with explicit witness chains.
//! * [`tableaux`]: Carter-Lusztig style tableaux for a coherent shape,
//!   the associated lowering monomials `F_t`, and the row-removal maps
//!   `rho_m` / `rho_M` (whose result may be UNDEFINED, which is a value,
//!   not an error).
//! * [`weyl_engine`]: a brute-force realization of `Delta(w)` mod p as the
//!   span of divided-power lowering monomials applied to the highest vector
//!   inside a tensor product of exterior powers of the natural module,
//!   together with the contravariant form, the simple quotient `L(w)`,
//!   primitive-vector solvers, and the submodule generated by
//!   `X_{-a_1}^{(k)} v+`.
//! * [`theorems`]: checkers for the two embedding criteria built on top of
//!   the pieces above, plus a small search harness over weight grids.
//! * [`cli`]: the `weylprim` command-line interface with deterministic JSON
//!   reports.

pub mod cli;
pub mod gfp_linalg;
pub mod jantzen;
pub mod root_weight;
pub mod tableaux;
pub mod theorems;
pub mod weyl_engine;
