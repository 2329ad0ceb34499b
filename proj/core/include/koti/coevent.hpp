#pragma once

#include <optional>
#include <string_view>

#include "koti/capacity.hpp"
#include "koti/event_algebra.hpp"

namespace koti {

enum class CoeventKind { Dense, Point, Support };

enum class SchemeFilter { All, Multiplicative, Homomorphic };

std::string_view to_string(SchemeFilter filter);
std::optional<SchemeFilter> scheme_from_string(std::string_view text);

struct SchemeClass {
  bool is_zero = false;
  bool is_unital = false;         // phi(unit) = 1
  bool is_proper = false;         // phi(zero) = 0
  bool is_multiplicative = false; // phi(A and B) = phi(A) * phi(B)
  bool is_homomorphic = false;    // preserves meet, join, complement; unital

  bool passes(SchemeFilter filter) const;
  bool operator==(const SchemeClass&) const = default;
};

// Total valuation phi from events to {0,1}. Immutable value type.
//
// Representations and their dense semantics:
//   Dense(table)  phi(A) = table bit at A's event index
//   Point(x)      phi(A) = 1 iff x in A
//   Support(S)    phi(A) = 1 iff S subset of A      (S nonempty)
class Coevent {
public:
  static Coevent point(SampleSpace space, std::size_t outcome);
  static Coevent point(SampleSpace space, std::string_view outcome); // UnknownOutcome
  static Coevent support(SampleSpace space, Bitmask outcome_set);    // EmptySupport
  static Coevent support(SampleSpace space, std::span<const std::string> outcomes);
  static Coevent table(SampleSpace space, Bitmask bits);             // TableLengthMismatch
  static Coevent table(SampleSpace space, std::string_view bits01);
  static Coevent zero(SampleSpace space);

  // Affirmation value; true = phi(A) = 1. SpaceMismatch when A lives elsewhere.
  bool operator()(const Event& a) const;

  const SampleSpace& space() const { return space_; }
  CoeventKind kind() const { return kind_; }

  // Raw payload: outcome mask for Point/Support, table for Dense.
  const Bitmask& bits() const { return bits_; }

  // The full 2^n table. Materializes for Point/Support.
  Bitmask dense_table() const;

  // Point becomes its singleton Support; a Dense table that is a support map
  // collapses to that Support. Idempotent, and equal coevents canonicalize to
  // the identical representation.
  Coevent canonical() const;

  // Dense-view equality, computed without materializing tables when possible.
  bool operator==(const Coevent& other) const;

private:
  Coevent(SampleSpace space, CoeventKind kind, Bitmask bits)
      : space_(std::move(space)), kind_(kind), bits_(std::move(bits)) {}

  SampleSpace space_;
  CoeventKind kind_;
  Bitmask bits_;
};

// Exhaustive scheme flags via brute force over all event pairs.
// CapacityExceeded when the space is over the classification cap.
SchemeClass classify(const Coevent& phi, const Capacity& caps = {});

// Deterministic, random-access enumeration of the coevents of a space.
//
// Order:  All            dense tables by increasing table integer
//         Multiplicative supports by increasing mask integer
//         Homomorphic    points in outcome order
class CoeventEnumeration {
public:
  CoeventEnumeration(SampleSpace space, SchemeFilter filter, const Capacity& caps = {});

  Count size() const { return size_; }
  Coevent at(Count i) const;

  const SampleSpace& space() const { return space_; }
  SchemeFilter filter() const { return filter_; }

private:
  SampleSpace space_;
  SchemeFilter filter_;
  Count size_;
};

inline CoeventEnumeration enumerate_coevents(SampleSpace space, SchemeFilter filter,
                                             const Capacity& caps = {}) {
  return CoeventEnumeration(std::move(space), filter, caps);
}

} // namespace koti
