#pragma once

#include <cstdint>
#include <vector>

#include "hopflab/exactcore/graded_map.hpp"
#include "hopflab/exactcore/lincomb.hpp"
#include "hopflab/exactcore/matrix.hpp"
#include "hopflab/forests/ordered.hpp"
#include "hopflab/words/words.hpp"

namespace hopflab::theta {

using exact::LinComb;
using forests::OrderedForest;
using words::ParkingWord;

/// Permutations (as words) in which every vertex of f appears after all of
/// its ancestors, sorted by serialization. There are n!/f! of them.
std::vector<ParkingWord> s_set(const OrderedForest& f);

/// Sum of the permutations in s_set(f); the unit goes to the empty word.
LinComb<ParkingWord> theta(const OrderedForest& f);
LinComb<ParkingWord> theta(const LinComb<OrderedForest>& x);

/// Bijections p from the vertices of f to those of g (written as the word
/// p(1)..p(n)) with: x above y in f implies p(x) >= p(y), and p(x) above
/// p(y) in g implies x >= y. Empty when the degrees differ.
std::vector<ParkingWord> pairing_set(const OrderedForest& f, const OrderedForest& g);

/// Number of elements of pairing_set(f, g).
std::uint64_t pairing(const OrderedForest& f, const OrderedForest& g);

/// Pairing values on enumerate_ordered(n) x enumerate_ordered(n).
exact::Matrix pairing_matrix(int n, unsigned jobs = 1);

/// Matrix of theta in degree n: rows enumerate_permutations(n), columns
/// enumerate_ordered(n) (or the heap-ordered forests). Cached per degree.
const exact::Matrix& theta_matrix(int n, bool heap_only = false);

/// Theta restricted to degrees 1..max_degree as a graded map.
exact::GradedMap<OrderedForest, ParkingWord> theta_map(int max_degree, bool heap_only = false);

/// Basis of the kernel of theta in degree n, as combinations of ordered
/// forests (first nonzero coefficient 1).
std::vector<LinComb<OrderedForest>> theta_kernel_basis(int n);

/// Basis of the kernel of the pairing matrix in degree n.
std::vector<LinComb<OrderedForest>> pairing_kernel_basis(int n);

}  // namespace hopflab::theta
