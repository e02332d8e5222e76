#pragma once

#include <string_view>
#include <vector>

#include "tripart/core.hpp"

namespace tripart {

/*
 * The triangle map on partitions of dimension >= 2:
 *
 *   T0 on Delta0: (l2,...,lm, l1-l2)    x [k1+k2, k3,...,km, k1]
 *   T1 on Delta1: (l1-lm, l2,...,lm)    x [k1,...,k(m-1), k1+km]
 *   TD on DeltaD: (l2,...,lm)           x [k1+k2, k3,...,k(m-1), k1+km]   (m >= 3)
 *                 (l2)                  x [2k1+k2]                        (m == 2)
 *
 * T0 and T1 preserve size and dimension and are bijections Delta0 -> M0 and
 * Delta1 -> M1, where M0 = {k1 > km} and M1 = {k1 < km}. TD preserves size and
 * drops the dimension by one.
 */
enum class Branch { T0, T1, TD };

std::string_view to_string(Branch b) noexcept;

struct MapStep {
  Partition input;
  Branch branch;
  Partition output;
};

struct Orbit {
  Partition start;
  std::vector<MapStep> steps;
  Partition terminal;
};

Partition apply_T0(const Partition& p);
Partition apply_T1(const Partition& p);
Partition apply_TD(const Partition& p);

/// Dispatches on classify(p). Throws DimensionOne for m = 1.
MapStep apply_T(const Partition& p);
inline Partition map_T(const Partition& p) { return apply_T(p).output; }

/// Applies the named branch, throwing WrongBranch if p is not in its domain.
Partition apply_branch(const Partition& p, Branch b);

bool in_M0(PartitionView p) noexcept;
bool in_M1(PartitionView p) noexcept;

Partition apply_T0_inverse(const Partition& p);
Partition apply_T1_inverse(const Partition& p);

Orbit orbit(const Partition& start, int max_steps);

/// True iff TD(a) == TD(b) implies a and b have the same parts. Both inputs
/// must lie in DeltaD.
bool td_part_injectivity_check(const Partition& a, const Partition& b);

}  // namespace tripart
