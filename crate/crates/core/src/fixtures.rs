//! Shared unit-test fixtures.

use crate::rat::{rat, Rat};
use crate::system::{StructuredMatrix, StructuredSystem};

/// Running demo pattern: 4 states, 3 inputs.
///
/// State arcs: x1->x1, x2->x1, x2->x2, x1->x3, x2->x3, x4->x3, x4->x4.
/// Input arcs: u1->x1, u1->x3, u2->x2, u2->x3, u3->x1, u3->x2, u3->x4.
pub fn demo_system() -> StructuredSystem {
    demo_system_with_costs([1, 1, 1])
}

pub fn demo_system_with_costs(costs: [i128; 3]) -> StructuredSystem {
    let a = StructuredMatrix::new(
        4,
        4,
        [(0, 0), (0, 1), (1, 1), (2, 0), (2, 1), (2, 3), (3, 3)],
    )
    .unwrap();
    let b = StructuredMatrix::new(
        4,
        3,
        [(0, 0), (0, 2), (1, 1), (1, 2), (2, 0), (2, 1), (3, 2)],
    )
    .unwrap();
    StructuredSystem::new(a, b, costs.into_iter().map(rat).collect()).unwrap()
}

/// Three states with arcs x1->x2 and x1->x3; the single input drives x2 only,
/// so x1 (and with it x3) is unreachable from the inputs.
pub fn inaccessible_three_state() -> StructuredSystem {
    let a = StructuredMatrix::new(3, 3, [(1, 0), (2, 0)]).unwrap();
    let b = StructuredMatrix::new(3, 1, [(1, 0)]).unwrap();
    StructuredSystem::new(a, b, vec![Rat::from_integer(1)]).unwrap()
}

/// Same state arcs, but the input drives x1: every state is reachable, yet
/// x1 alone must feed both x2 and x3, a dilation.
pub fn dilated_three_state() -> StructuredSystem {
    let a = StructuredMatrix::new(3, 3, [(1, 0), (2, 0)]).unwrap();
    let b = StructuredMatrix::new(3, 1, [(0, 0)]).unwrap();
    StructuredSystem::new(a, b, vec![Rat::from_integer(1)]).unwrap()
}
