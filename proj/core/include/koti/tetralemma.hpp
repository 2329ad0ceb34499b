#pragma once

#include <array>
#include <span>
#include <vector>

#include "koti/coevent.hpp"

namespace koti {

// The four alternatives, numbered in their traditional list order:
//   C1: phi(A)=1, phi(~A)=0    C2: phi(A)=0, phi(~A)=1
//   C3: phi(A)=1, phi(~A)=1    C4: phi(A)=0, phi(~A)=0
enum class Corner { C1 = 1, C2 = 2, C3 = 3, C4 = 4 };

inline int corner_number(Corner c) { return static_cast<int>(c); }
std::string_view corner_reading(Corner c);
Corner corner_from_bits(bool on_event, bool on_complement);

// Every (phi, A) lands in exactly one corner.
Corner corner(const Coevent& phi, const Event& a);

struct CensusReport {
  Event event;
  SchemeFilter scheme;
  std::array<Count, 4> corners{}; // indexed C1..C4
  Count total = 0;

  Count corner_count(Corner c) const { return corners[static_cast<std::size_t>(c) - 1]; }
};

CensusReport census(const SampleSpace& space, const Event& a, SchemeFilter filter,
                    const Capacity& caps = {}, unsigned jobs = 1);

// True iff phi denies every cell.
bool deny_all(const Coevent& phi, std::span<const Event> cells);

struct DenialCensusReport {
  std::vector<Event> cells;
  SchemeFilter scheme;
  Count deniers = 0;
  Count total = 0;
};

DenialCensusReport denial_census(const SampleSpace& space, std::span<const Event> cells,
                                 SchemeFilter filter, const Capacity& caps = {},
                                 unsigned jobs = 1);

// The causation tetralemma read as the four subsets of {self-cause, other-cause}:
// outcomes are the subsets, cells are their singletons in the order
// (self only, other only, both, none). The cells partition the space.
struct CausationTetralemma {
  SampleSpace space;            // {none, self, other, both}
  std::array<Event, 4> cells;   // {self}, {other}, {both}, {none}
};

CausationTetralemma causation_tetralemma();

} // namespace koti
