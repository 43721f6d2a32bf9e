//! Exact computation of the homotopy polynomial of links in the 3-sphere
//! from linking matrices, the signed/weighted/doubled dichromatic graph
//! polynomials it corresponds to, recovery of linking numbers from the
//! polynomial, the HOMFLYPT bridge for matched diagrams, and q-deformed
//! Lie-algebra / PBW normal-form machinery.
//!
//! All arithmetic is exact (arbitrary-precision integer coefficients); the
//! independently implemented computation routes are cross-checked against
//! each other in the `verify` module and the test suite.

pub mod cli;
pub mod dichromatic;
pub mod graph;
pub mod homfly;
pub mod link;
pub mod poly;
pub mod qlie;
pub mod verify;
pub mod young;

#[cfg(test)]
mod thread_safety {
    // all domain values are immutable after construction and share freely
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn domain_types_are_send_and_sync() {
        assert_send_sync::<crate::poly::QLaurent>();
        assert_send_sync::<crate::poly::HPoly>();
        assert_send_sync::<crate::graph::SignedMultigraph>();
        assert_send_sync::<crate::graph::WeightedGraph>();
        assert_send_sync::<crate::graph::EdgeOrder>();
        assert_send_sync::<crate::link::LinkingMatrix>();
        assert_send_sync::<crate::link::BraidWord>();
        assert_send_sync::<crate::homfly::HomflyPoly>();
        assert_send_sync::<crate::qlie::FormMatrix>();
        assert_send_sync::<crate::qlie::GroupAlgElem>();
        assert_send_sync::<crate::qlie::TensorWordSum>();
        assert_send_sync::<crate::young::IntMultiset>();
        assert_send_sync::<crate::young::ColumnFunction>();
    }
}
