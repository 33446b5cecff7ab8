//! Fixtures shared by the criterion benchmarks.

use jetframe::{GroupElement, Jet, Solution};

/// A generic on-solution jet away from the soliton crest.
pub fn soliton_jet(order: usize) -> Jet {
    Solution::soliton(1.2, 0.3)
        .jet_at(0.4, 1.9, order)
        .expect("soliton is regular away from the crest")
}

pub fn sample_element() -> GroupElement {
    GroupElement::new(0.7, -1.3, 0.45, 0.2)
}
