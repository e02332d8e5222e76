#include "tripart/trimap.hpp"

#include <algorithm>

namespace tripart {

namespace {

[[noreturn]] void wrong_branch(const Partition& p, std::string_view branch, std::string_view need) {
  throw Error(Errc::WrongBranch, std::string(branch) + " needs an input in " + std::string(need) +
                                     ", got " + to_string(p) + " in " +
                                     std::string(to_string(classify(p))));
}

}  // namespace

std::string_view to_string(Branch b) noexcept {
  switch (b) {
    case Branch::T0: return "T0";
    case Branch::T1: return "T1";
    case Branch::TD: return "TD";
  }
  return "?";
}

Partition apply_T0(const Partition& p) {
  if (classify(p) != PartitionClass::Delta0) wrong_branch(p, "T0", "Delta0");
  const auto l = p.parts();
  const auto k = p.mults();
  const std::size_t m = l.size();
  std::vector<Int> parts(l.begin() + 1, l.end());
  parts.push_back(checked_sub(l[0], l[1]));
  std::vector<Int> mults;
  mults.reserve(m);
  mults.push_back(checked_add(k[0], k[1]));
  mults.insert(mults.end(), k.begin() + 2, k.end());
  mults.push_back(k[0]);
  return Partition(std::move(parts), std::move(mults));
}

Partition apply_T1(const Partition& p) {
  if (classify(p) != PartitionClass::Delta1) wrong_branch(p, "T1", "Delta1");
  std::vector<Int> parts(p.parts().begin(), p.parts().end());
  std::vector<Int> mults(p.mults().begin(), p.mults().end());
  parts.front() = checked_sub(parts.front(), parts.back());
  mults.back() = checked_add(mults.front(), mults.back());
  return Partition(std::move(parts), std::move(mults));
}

Partition apply_TD(const Partition& p) {
  if (classify(p) != PartitionClass::DeltaD) wrong_branch(p, "TD", "DeltaD");
  const auto l = p.parts();
  const auto k = p.mults();
  if (l.size() == 2) return Partition({l[1]}, {checked_add(checked_mul(2, k[0]), k[1])});
  std::vector<Int> parts(l.begin() + 1, l.end());
  std::vector<Int> mults;
  mults.push_back(checked_add(k[0], k[1]));
  mults.insert(mults.end(), k.begin() + 2, k.end() - 1);
  mults.push_back(checked_add(k[0], k.back()));
  return Partition(std::move(parts), std::move(mults));
}

MapStep apply_T(const Partition& p) {
  switch (classify(p)) {
    case PartitionClass::Delta0: return {p, Branch::T0, apply_T0(p)};
    case PartitionClass::Delta1: return {p, Branch::T1, apply_T1(p)};
    case PartitionClass::DeltaD: return {p, Branch::TD, apply_TD(p)};
    case PartitionClass::Dim1: break;
  }
  throw Error(Errc::DimensionOne, "T is undefined on " + to_string(p));
}

Partition apply_branch(const Partition& p, Branch b) {
  switch (b) {
    case Branch::T0: return apply_T0(p);
    case Branch::T1: return apply_T1(p);
    case Branch::TD: return apply_TD(p);
  }
  throw Error(Errc::WrongBranch, "unknown branch");
}

bool in_M0(PartitionView p) noexcept { return p.mults.front() > p.mults.back(); }
bool in_M1(PartitionView p) noexcept { return p.mults.front() < p.mults.back(); }

Partition apply_T0_inverse(const Partition& p) {
  if (!in_M0(p.view())) throw Error(Errc::NotInM0, "T0^-1 needs k1 > km, got " + to_string(p));
  const auto l = p.parts();
  const auto k = p.mults();
  std::vector<Int> parts;
  parts.push_back(checked_add(l.front(), l.back()));
  parts.insert(parts.end(), l.begin(), l.end() - 1);
  std::vector<Int> mults;
  mults.push_back(k.back());
  mults.push_back(checked_sub(k.front(), k.back()));
  mults.insert(mults.end(), k.begin() + 1, k.end() - 1);
  return Partition(std::move(parts), std::move(mults));
}

Partition apply_T1_inverse(const Partition& p) {
  if (!in_M1(p.view())) throw Error(Errc::NotInM1, "T1^-1 needs k1 < km, got " + to_string(p));
  std::vector<Int> parts(p.parts().begin(), p.parts().end());
  std::vector<Int> mults(p.mults().begin(), p.mults().end());
  parts.front() = checked_add(parts.front(), parts.back());
  mults.back() = checked_sub(mults.back(), mults.front());
  return Partition(std::move(parts), std::move(mults));
}

Orbit orbit(const Partition& start, int max_steps) {
  Orbit out{start, {}, start};
  for (int i = 0; i < max_steps && out.terminal.dimension() >= 2; ++i) {
    out.steps.push_back(apply_T(out.terminal));
    out.terminal = out.steps.back().output;
  }
  return out;
}

bool td_part_injectivity_check(const Partition& a, const Partition& b) {
  const Partition ta = apply_TD(a);
  const Partition tb = apply_TD(b);
  if (ta != tb) return true;
  return std::equal(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end());
}

}  // namespace tripart
