#pragma once

#include <vector>

#include "koti/tetralemma.hpp"

namespace koti {

// The coevents of a base space, re-packaged as a sample space of their own so
// every first-order operation applies one level up. Outcome i is the i-th
// coevent in enumeration order, labeled "phi_<index>_<dense-table-integer>".
class SecondOrderSpace {
public:
  static SecondOrderSpace lift(const SampleSpace& base, SchemeFilter universe,
                               const Capacity& caps = {});

  const SampleSpace& base() const { return base_; }
  SchemeFilter universe() const { return universe_; }
  const SampleSpace& as_space() const { return as_space_; }
  std::size_t size() const { return outcomes_.size(); }
  const Coevent& outcome(std::size_t i) const { return outcomes_.at(i); }

  // The set of base coevents landing in corner c on base_event.
  Event corner_event(const Event& base_event, Corner c) const;

private:
  SecondOrderSpace(SampleSpace base, SchemeFilter universe, SampleSpace as_space,
                   std::vector<Coevent> outcomes);

  SampleSpace base_;
  SchemeFilter universe_;
  SampleSpace as_space_;
  std::vector<Coevent> outcomes_;
};

inline SecondOrderSpace lift(const SampleSpace& base, SchemeFilter universe,
                             const Capacity& caps = {}) {
  return SecondOrderSpace::lift(base, universe, caps);
}

// True iff psi denies all four corner events of base_event.
bool nagarjuna_denies(const SecondOrderSpace& so, const Coevent& psi, const Event& base_event);

struct NagarjunaReport {
  Event event; // over the base space
  SchemeFilter universe;
  SchemeFilter scheme2;
  Count deniers = 0;
  Count total = 0;
};

NagarjunaReport nagarjuna_census(const SecondOrderSpace& so, const Event& base_event,
                                 SchemeFilter scheme2, const Capacity& caps = {},
                                 unsigned jobs = 1);

} // namespace koti
