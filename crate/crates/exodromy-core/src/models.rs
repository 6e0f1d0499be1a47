//! Curated finite models: small stratified complexes with group actions
//! that exercise every part of the pipeline, plus deliberately broken
//! variants for testing the validator.
//!
//! Every curated constructor returns a validated complex carrying its
//! stabilizer stratification.

use alloc::string::String;
use alloc::vec::Vec;

use crate::complex::{barycentric_subdivide, cone_complex, stabilizer_stratification, GComplex};
use crate::group::{builtin, PermGroup};
use crate::perm::Perm;

/// An interval with its endpoints swapped by a flip; the midpoint is the
/// unique fixed vertex. Three vertices, two exiting edges.
pub fn interval_flip() -> GComplex {
    let g = builtin("C2").expect("C2 exists");
    // 0 = L, 1 = M (fixed), 2 = R; edges run out of the fixed midpoint
    let x = GComplex::new(
        g,
        3,
        alloc::vec![(1, 0), (1, 2)],
        Vec::new(),
        alloc::vec![(alloc::vec![2, 1, 0], alloc::vec![1, 0])],
    )
    .expect("interval data is consistent")
    .with_vertex_names(&["L", "M", "R"]);
    stabilizer_stratification(&x).expect("stabilizers classify")
}

/// A circle with four marked points N, E, S, W and the reflection that
/// swaps E and W; N and S are fixed.
pub fn circle_reflect() -> GComplex {
    let g = builtin("C2").expect("C2 exists");
    // edges run from the fixed poles out to the generic points
    let x = GComplex::new(
        g,
        4,
        alloc::vec![(0, 1), (0, 3), (2, 1), (2, 3)],
        Vec::new(),
        alloc::vec![(alloc::vec![0, 3, 2, 1], alloc::vec![1, 0, 3, 2])],
    )
    .expect("circle data is consistent")
    .with_vertex_names(&["N", "E", "S", "W"]);
    stabilizer_stratification(&x).expect("stabilizers classify")
}

/// A hexagonal circle rotated freely by the order-three rotation (each
/// generator step advances two vertices).
pub fn circle_rotate_3() -> GComplex {
    let g = builtin("C3").expect("C3 exists");
    let edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    let vperm: Vec<usize> = (0..6).map(|i| (i + 2) % 6).collect();
    let eperm = vperm.clone();
    let x = GComplex::new(g, 6, edges, Vec::new(), alloc::vec![(vperm, eperm)])
        .expect("hexagon data is consistent");
    stabilizer_stratification(&x).expect("stabilizers classify")
}

/// A disk modeled as the cone on an octagonal circle, with the rotation
/// of order four (advancing two vertices) fixing only the center.
pub fn disk_rotate_4() -> GComplex {
    let g = builtin("C4").expect("C4 exists");
    let edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    let vperm: Vec<usize> = (0..8).map(|i| (i + 2) % 8).collect();
    let eperm = vperm.clone();
    let rim = GComplex::new(g, 8, edges, Vec::new(), alloc::vec![(vperm, eperm)])
        .expect("octagon data is consistent");
    let rim = stabilizer_stratification(&rim).expect("stabilizers classify");
    cone_complex(&rim).expect("cone of a valid rim")
}

/// The Klein four-group acting on a square by its two diagonal
/// reflections, written on the raw four-cycle. The action flips edges in
/// place, so this model fails validation; see [`square_klein4`] for the
/// subdivided repair.
pub fn raw_square_klein4() -> GComplex {
    let a = Perm::from_cycles(4, &[&[1, 3]]).expect("transposition");
    let b = Perm::from_cycles(4, &[&[0, 2]]).expect("transposition");
    let g = PermGroup::new(4, alloc::vec![a, b]).expect("Klein four-group");
    // square 0-1-2-3; the diagonal reflection through 0 and 2 carries
    // edge (0,1) onto edge (3,0) against its orientation
    GComplex::new(
        g,
        4,
        alloc::vec![(0, 1), (1, 2), (2, 3), (3, 0)],
        Vec::new(),
        alloc::vec![
            (alloc::vec![0, 3, 2, 1], alloc::vec![3, 2, 1, 0]),
            (alloc::vec![2, 1, 0, 3], alloc::vec![1, 0, 3, 2]),
        ],
    )
    .expect("square data is consistent")
}

/// The barycentric subdivision of the Klein four-group square: an
/// eight-cycle whose corners are fixed by one reflection each and whose
/// edge midpoints move freely.
pub fn square_klein4() -> GComplex {
    barycentric_subdivide(&raw_square_klein4()).expect("subdivision repairs the square")
}

/// The reflection circle with a fifth edge that the flip fails to move;
/// rejected by the validator.
pub fn circle_reflect_extra_edge() -> GComplex {
    let g = builtin("C2").expect("C2 exists");
    GComplex::new(
        g,
        4,
        alloc::vec![(0, 1), (0, 3), (2, 1), (2, 3), (0, 1)],
        Vec::new(),
        alloc::vec![(alloc::vec![0, 3, 2, 1], alloc::vec![1, 0, 3, 2, 4])],
    )
    .expect("edge data is consistent")
}

/// All curated models with their names, in canonical order.
pub fn curated() -> Vec<(&'static str, GComplex)> {
    alloc::vec![
        ("interval-flip", interval_flip()),
        ("circle-reflect", circle_reflect()),
        ("circle-rotate-3", circle_rotate_3()),
        ("disk-rotate-4", disk_rotate_4()),
        ("square-klein4", square_klein4()),
    ]
}

pub fn by_name(name: &str) -> Option<GComplex> {
    curated()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, x)| x)
}

/// The canonical model names.
pub fn names() -> Vec<String> {
    curated().iter().map(|(n, _)| String::from(*n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{validate_gcomplex, Cell};

    #[test]
    fn curated_models_validate() {
        for (name, x) in curated() {
            assert!(
                validate_gcomplex(&x).is_verified(),
                "model {name} fails validation"
            );
        }
    }

    #[test]
    fn interval_flip_shape() {
        let x = interval_flip();
        assert_eq!(x.vertices, 3);
        assert_eq!(x.stabilizer(Cell::V(1)).order(), 2);
        assert_eq!(x.stabilizer(Cell::V(0)).order(), 1);
    }

    #[test]
    fn circle_rotate_3_is_free() {
        let x = circle_rotate_3();
        for c in x.cells() {
            assert_eq!(x.stabilizer(c).order(), 1);
        }
    }

    #[test]
    fn disk_rotate_4_fixes_only_the_center() {
        let x = disk_rotate_4();
        assert_eq!(x.vertices, 9);
        assert_eq!(x.edges.len(), 16);
        assert_eq!(x.faces.len(), 8);
        assert_eq!(x.stabilizer(Cell::V(0)).order(), 4);
        for v in 1..x.vertices {
            assert_eq!(x.stabilizer(Cell::V(v)).order(), 1);
        }
    }

    #[test]
    fn square_klein4_alternates_corners_and_midpoints() {
        let x = square_klein4();
        assert_eq!(x.vertices, 8);
        assert_eq!(x.edges.len(), 8);
        assert_eq!(x.group.order(), 4);
        // original corners keep an order-two stabilizer, midpoints are free
        for v in 0..4 {
            assert_eq!(x.stabilizer(Cell::V(v)).order(), 2, "corner {v}");
        }
        for v in 4..8 {
            assert_eq!(x.stabilizer(Cell::V(v)).order(), 1, "midpoint {v}");
        }
    }

    #[test]
    fn broken_fixtures_are_refuted() {
        assert!(validate_gcomplex(&raw_square_klein4()).is_refuted());
        assert!(validate_gcomplex(&circle_reflect_extra_edge()).is_refuted());
    }

    #[test]
    fn lookup_by_name() {
        assert!(by_name("circle-reflect").is_some());
        assert!(by_name("torus").is_none());
        assert_eq!(names().len(), 5);
    }
}
