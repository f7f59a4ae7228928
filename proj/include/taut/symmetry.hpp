#pragma once

#include <string>
#include <vector>

#include "taut/covariant_space.hpp"

namespace taut {

/// Partition of 6, weakly decreasing.
struct YoungPartition {
  std::vector<int> parts;

  int size() const;
  std::string to_string() const;  // "[4,1^2]"
  static YoungPartition parse(const std::string& text);  // "4,1,1", "[4,1^2]" or "411"

  friend bool operator==(const YoungPartition&, const YoungPartition&) = default;
};

/// The eleven partitions of 6, ordered [6], [5,1], [4,2], ..., [1^6].
const std::vector<YoungPartition>& partitions_of_6();
/// Index of lambda in partitions_of_6().
std::size_t partition_position(const YoungPartition& lambda);

/// Murnaghan-Nakayama value chi^lambda on the class with cycle type mu.
long character(const YoungPartition& lambda, const YoungPartition& mu);
long class_size(const YoungPartition& mu);
YoungPartition cycle_type(const Perm6& sigma);
/// A permutation with the given cycle type.
Perm6 class_representative(const YoungPartition& mu);
/// All 720 permutations in lexicographic order.
const std::vector<Perm6>& all_permutations();

/// Matrix of sigma on the row basis of the space.
std::vector<std::vector<GaussRat>> action_matrix(const CovariantSpace& space, const Perm6& sigma);

/// Throws NotClosedUnderAction unless the space is stable under S6.
void require_s6_stable(const CovariantSpace& space);

struct IsotypicPart {
  YoungPartition lambda;
  long multiplicity = 0;
  long dimension = 0;  // multiplicity * dim(lambda)
};

/// Multiplicities of the irreducibles, from traces on class representatives.
std::vector<IsotypicPart> decompose(const CovariantSpace& space);

/// Projector (dim lambda / 720) sum chi(sigma) rho(sigma) in row coordinates.
std::vector<std::vector<GaussRat>> isotypic_projector(const CovariantSpace& space, const YoungPartition& lambda);
/// Basis of the lambda-isotypic component.
std::vector<Covariant> isotypic_project(const CovariantSpace& space, const YoungPartition& lambda);
/// Image of one member of the space under the lambda-projector.
Covariant isotypic_component_of(const CovariantSpace& space, const YoungPartition& lambda, const Covariant& c);

}  // namespace taut
