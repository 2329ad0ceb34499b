#include "koti/coevent.hpp"

#include <string>

namespace koti {

std::string_view to_string(SchemeFilter filter) {
  switch (filter) {
    case SchemeFilter::All: return "all";
    case SchemeFilter::Multiplicative: return "multiplicative";
    case SchemeFilter::Homomorphic: return "homomorphic";
  }
  return "all";
}

std::optional<SchemeFilter> scheme_from_string(std::string_view text) {
  if (text == "all") return SchemeFilter::All;
  if (text == "multiplicative") return SchemeFilter::Multiplicative;
  if (text == "homomorphic") return SchemeFilter::Homomorphic;
  return std::nullopt;
}

bool SchemeClass::passes(SchemeFilter filter) const {
  switch (filter) {
    case SchemeFilter::All: return true;
    // Properness is required on top of the algebraic law: the constant-1
    // valuation is multiplicative and unital but affirms the zero event.
    case SchemeFilter::Multiplicative: return is_multiplicative && is_unital && is_proper;
    case SchemeFilter::Homomorphic: return is_homomorphic;
  }
  return false;
}

namespace {

// 2^n as a table length; n >= 64 cannot name a materializable table.
std::size_t table_length(std::size_t n) {
  if (n >= 64) return 0;
  return std::size_t{1} << n;
}

void check_dense_view(const SampleSpace& space) {
  if (space.size() > kDenseViewCap)
    throw Error(ErrorKind::CapacityExceeded,
                "dense table over " + std::to_string(space.size()) +
                    " outcomes exceeds the materializable bound " +
                    std::to_string(kDenseViewCap));
}

} // namespace

Coevent Coevent::point(SampleSpace space, std::size_t outcome) {
  if (outcome >= space.size())
    throw Error(ErrorKind::UnknownOutcome,
                "outcome index " + std::to_string(outcome) + " out of range");
  Bitmask m = Bitmask::singleton(space.size(), outcome);
  return Coevent(std::move(space), CoeventKind::Point, std::move(m));
}

Coevent Coevent::point(SampleSpace space, std::string_view outcome) {
  const std::size_t i = space.index_of(outcome);
  return point(std::move(space), i);
}

Coevent Coevent::support(SampleSpace space, Bitmask outcome_set) {
  if (outcome_set.size() != space.size())
    throw std::logic_error("support mask length does not match space size");
  if (outcome_set.none())
    throw Error(ErrorKind::EmptySupport, "support must be a nonempty outcome set");
  return Coevent(std::move(space), CoeventKind::Support, std::move(outcome_set));
}

Coevent Coevent::support(SampleSpace space, std::span<const std::string> outcomes) {
  Bitmask m(space.size());
  for (const auto& name : outcomes) m.set(space.index_of(name));
  return support(std::move(space), std::move(m));
}

Coevent Coevent::table(SampleSpace space, Bitmask bits) {
  const std::size_t expected = table_length(space.size());
  if (expected == 0 || bits.size() != expected)
    throw Error(ErrorKind::TableLengthMismatch,
                "dense table needs exactly 2^" + std::to_string(space.size()) +
                    " bits, got " + std::to_string(bits.size()));
  check_dense_view(space);
  return Coevent(std::move(space), CoeventKind::Dense, std::move(bits));
}

Coevent Coevent::table(SampleSpace space, std::string_view bits01) {
  Bitmask m(bits01.size());
  for (std::size_t i = 0; i < bits01.size(); ++i) {
    const char c = bits01[i];
    if (c != '0' && c != '1')
      throw Error(ErrorKind::TableLengthMismatch,
                  std::string("dense table may contain only 0 and 1, got '") + c + "'");
    if (c == '1') m.set(i);
  }
  return table(std::move(space), std::move(m));
}

Coevent Coevent::zero(SampleSpace space) {
  check_dense_view(space);
  Bitmask empty(table_length(space.size()));
  return Coevent(std::move(space), CoeventKind::Dense, std::move(empty));
}

bool Coevent::operator()(const Event& a) const {
  if (!(a.space() == space_))
    throw Error(ErrorKind::SpaceMismatch, "event lives in a different space than the coevent");
  switch (kind_) {
    case CoeventKind::Point:
    case CoeventKind::Support:
      return bits_.is_subset_of(a.members());
    case CoeventKind::Dense:
      return bits_.test(static_cast<std::size_t>(a.index()));
  }
  throw std::logic_error("unreachable CoeventKind");
}

Bitmask Coevent::dense_table() const {
  if (kind_ == CoeventKind::Dense) return bits_;
  check_dense_view(space_);
  const std::size_t len = table_length(space_.size());
  Bitmask out(len);
  for (std::size_t e = 0; e < len; ++e) {
    const Bitmask members = Bitmask::from_u64(space_.size(), e);
    if (bits_.is_subset_of(members)) out.set(e);
  }
  return out;
}

Coevent Coevent::canonical() const {
  switch (kind_) {
    case CoeventKind::Support:
      return *this;
    case CoeventKind::Point:
      return Coevent(space_, CoeventKind::Support, bits_);
    case CoeventKind::Dense: {
      // A support map affirms exactly the supersets of the intersection of
      // its affirmed events; recover that candidate and verify.
      if (bits_.none()) return *this;
      Bitmask candidate = Bitmask::ones(space_.size());
      for (std::size_t e = 0; e < bits_.size(); ++e)
        if (bits_.test(e)) candidate = candidate & Bitmask::from_u64(space_.size(), e);
      if (candidate.none()) return *this;
      const Coevent as_support(space_, CoeventKind::Support, candidate);
      if (as_support.dense_table() == bits_) return as_support;
      return *this;
    }
  }
  throw std::logic_error("unreachable CoeventKind");
}

bool Coevent::operator==(const Coevent& other) const {
  if (!(space_ == other.space_)) return false;
  const Coevent a = canonical();
  const Coevent b = other.canonical();
  return a.kind_ == b.kind_ && a.bits_ == b.bits_;
}

SchemeClass classify(const Coevent& phi, const Capacity& caps) {
  const std::size_t n = phi.space().size();
  if (n > caps.classify_limit())
    throw Error(ErrorKind::CapacityExceeded,
                "classification scans all event pairs; space size " + std::to_string(n) +
                    " exceeds cap " + std::to_string(caps.classify_limit()));

  const Bitmask t = phi.dense_table();
  const std::size_t events = t.size();
  const std::size_t unit = events - 1;

  SchemeClass out;
  out.is_zero = t.none();
  out.is_unital = t.test(unit);
  out.is_proper = !t.test(0);

  bool multiplicative = true;
  bool preserves_join = true;
  for (std::size_t a = 0; a < events && (multiplicative || preserves_join); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      if (t.test(a & b) != (t.test(a) && t.test(b))) multiplicative = false;
      if (t.test(a | b) != (t.test(a) || t.test(b))) preserves_join = false;
      if (!multiplicative && !preserves_join) break;
    }
  }
  bool preserves_complement = true;
  for (std::size_t a = 0; a < events; ++a) {
    if (t.test(unit & ~a) == t.test(a)) {
      preserves_complement = false;
      break;
    }
  }

  out.is_multiplicative = multiplicative;
  out.is_homomorphic = multiplicative && preserves_join && preserves_complement && out.is_unital;
  return out;
}

CoeventEnumeration::CoeventEnumeration(SampleSpace space, SchemeFilter filter,
                                       const Capacity& caps)
    : space_(std::move(space)), filter_(filter), size_(0) {
  const std::size_t n = space_.size();
  switch (filter_) {
    case SchemeFilter::All:
      if (n > caps.dense_cap())
        throw Error(ErrorKind::CapacityExceeded,
                    "dense enumeration needs 2^2^" + std::to_string(n) +
                        " coevents; space size exceeds cap " + std::to_string(caps.dense_cap()));
      size_ = checked_pow2(std::size_t{1} << n);
      break;
    case SchemeFilter::Multiplicative:
      if (n > kSupportEnumCap)
        throw Error(ErrorKind::CapacityExceeded,
                    "support enumeration cap is " + std::to_string(kSupportEnumCap) +
                        " outcomes, got " + std::to_string(n));
      size_ = checked_pow2(n) - 1;
      break;
    case SchemeFilter::Homomorphic:
      if (n > kPointEnumCap)
        throw Error(ErrorKind::CapacityExceeded,
                    "point enumeration cap is " + std::to_string(kPointEnumCap) +
                        " outcomes, got " + std::to_string(n));
      size_ = n;
      break;
  }
}

Coevent CoeventEnumeration::at(Count i) const {
  if (i >= size_) throw std::logic_error("enumeration index out of range");
  switch (filter_) {
    case SchemeFilter::All: {
      const std::size_t len = std::size_t{1} << space_.size();
      return Coevent::table(space_, Bitmask::from_u64(len, i));
    }
    case SchemeFilter::Multiplicative:
      return Coevent::support(space_, Bitmask::from_u64(space_.size(), i + 1));
    case SchemeFilter::Homomorphic:
      return Coevent::point(space_, static_cast<std::size_t>(i));
  }
  throw std::logic_error("unreachable SchemeFilter");
}

} // namespace koti
