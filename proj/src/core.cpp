#include "tripart/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace tripart {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(Errc::Overflow, std::to_string(a) + " + " + std::to_string(b));
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(Errc::Overflow, std::to_string(a) + " - " + std::to_string(b));
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(Errc::Overflow, std::to_string(a) + " * " + std::to_string(b));
  return r;
}

std::string_view to_string(PartitionClass c) noexcept {
  switch (c) {
    case PartitionClass::Delta0: return "Delta0";
    case PartitionClass::Delta1: return "Delta1";
    case PartitionClass::DeltaD: return "DeltaD";
    case PartitionClass::Dim1: return "Dim1";
  }
  return "?";
}

Int PartitionView::size() const {
  Int n = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) n = checked_add(n, checked_mul(parts[i], mults[i]));
  return n;
}

PartitionClass classify(PartitionView p) {
  if (p.dimension() == 1) return PartitionClass::Dim1;
  // For m = 2 this is l2 + l2 = 2*l2.
  const Int rhs = checked_add(p.parts[1], p.parts.back());
  const Int l1 = p.parts[0];
  if (l1 < rhs) return PartitionClass::Delta0;
  if (l1 > rhs) return PartitionClass::Delta1;
  return PartitionClass::DeltaD;
}

Partition::Partition(std::vector<Int> parts, std::vector<Int> mults)
    : parts_(std::move(parts)), mults_(std::move(mults)) {
  if (parts_.size() != mults_.size())
    throw Error(Errc::LengthMismatch, std::to_string(parts_.size()) + " parts but " +
                                          std::to_string(mults_.size()) + " multiplicities");
  if (parts_.empty()) throw Error(Errc::EmptyPartition, "a partition needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || mults_[i] <= 0)
      throw Error(Errc::NonPositiveEntry, "entry " + std::to_string(i + 1) + " is not positive");
    if (i > 0 && parts_[i] >= parts_[i - 1])
      throw Error(Errc::NonDecreasingParts,
                  "part " + std::to_string(i + 1) + " (" + std::to_string(parts_[i]) +
                      ") is not below the previous part (" + std::to_string(parts_[i - 1]) + ")");
  }
  // Reject sizes that would overflow later.
  (void)view().size();
}

Partition make_partition(std::vector<Int> parts, std::vector<Int> mults) {
  return Partition(std::move(parts), std::move(mults));
}

Partition to_partition(PartitionView v) {
  return Partition({v.parts.begin(), v.parts.end()}, {v.mults.begin(), v.mults.end()});
}

Partition from_weak_sequence(std::span<const Int> seq) {
  std::vector<Int> parts;
  std::vector<Int> mults;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] <= 0)
      throw Error(Errc::NonPositiveEntry, "entry " + std::to_string(i + 1) + " is not positive");
    if (i > 0 && seq[i] > seq[i - 1])
      throw Error(Errc::NotSorted, "entry " + std::to_string(i + 1) + " exceeds its predecessor");
    if (!parts.empty() && parts.back() == seq[i])
      ++mults.back();
    else {
      parts.push_back(seq[i]);
      mults.push_back(1);
    }
  }
  return Partition(std::move(parts), std::move(mults));
}

std::vector<Int> expand(const Partition& p) {
  std::vector<Int> out;
  for (int i = 1; i <= p.dimension(); ++i) out.insert(out.end(), static_cast<std::size_t>(p.mult(i)), p.part(i));
  return out;
}

bool canonical_before(PartitionView a, PartitionView b) {
  // Walk both expanded sequences run by run without materializing them.
  std::size_t ia = 0, ib = 0;
  Int ra = a.mults.empty() ? 0 : a.mults[0];
  Int rb = b.mults.empty() ? 0 : b.mults[0];
  while (ia < a.parts.size() && ib < b.parts.size()) {
    if (a.parts[ia] != b.parts[ib]) return a.parts[ia] > b.parts[ib];
    const Int step = std::min(ra, rb);
    ra -= step;
    rb -= step;
    if (ra == 0 && ++ia < a.parts.size()) ra = a.mults[ia];
    if (rb == 0 && ++ib < b.parts.size()) rb = b.mults[ib];
  }
  // A proper prefix sorts after the longer sequence in descending order.
  return ia < a.parts.size() && ib == b.parts.size();
}

bool canonical_before(const Partition& a, const Partition& b) {
  return canonical_before(a.view(), b.view());
}

namespace {

void join(std::ostringstream& os, std::span<const Int> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
}

}  // namespace

std::string to_string(PartitionView p, Glyph glyph) {
  std::ostringstream os;
  os << '(';
  join(os, p.parts);
  os << ')' << (glyph == Glyph::Times ? "×" : "x") << '[';
  join(os, p.mults);
  os << ']';
  return os.str();
}

std::string to_string(const Partition& p, Glyph glyph) { return to_string(p.view(), glyph); }

namespace {

class PartitionTextParser {
 public:
  explicit PartitionTextParser(std::string_view text) : text_(text) {}

  Partition parse() {
    auto parts = list('(', ')');
    skip_ws();
    if (consume("×") || consume("x") || consume("X") || consume("*")) {
    } else {
      fail("expected 'x' between parts and multiplicities");
    }
    auto mults = list('[', ']');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return Partition(std::move(parts), std::move(mults));
  }

 private:
  std::vector<Int> list(char open, char close) {
    skip_ws();
    if (!consume(std::string_view(&open, 1))) fail(std::string("expected '") + open + "'");
    std::vector<Int> out;
    for (;;) {
      skip_ws();
      Int value = 0;
      const char* first = text_.data() + pos_;
      const char* last = text_.data() + text_.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr == first) fail("expected an integer");
      pos_ += static_cast<std::size_t>(ptr - first);
      out.push_back(value);
      skip_ws();
      if (consume(",")) continue;
      if (consume(std::string_view(&close, 1))) return out;
      fail(std::string("expected ',' or '") + close + "'");
    }
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::BadPartitionText, why + " in \"" + std::string(text_) + "\"", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Partition parse_partition(std::string_view text) { return PartitionTextParser(text).parse(); }

}  // namespace tripart
