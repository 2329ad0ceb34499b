#include "koti/tetralemma.hpp"

#include "parallel.hpp"

namespace koti {

std::string_view corner_reading(Corner c) {
  switch (c) {
    case Corner::C1: return "affirm A, deny not-A";
    case Corner::C2: return "deny A, affirm not-A";
    case Corner::C3: return "affirm both";
    case Corner::C4: return "deny both";
  }
  return "";
}

Corner corner_from_bits(bool on_event, bool on_complement) {
  if (on_event && !on_complement) return Corner::C1;
  if (!on_event && on_complement) return Corner::C2;
  if (on_event && on_complement) return Corner::C3;
  return Corner::C4;
}

Corner corner(const Coevent& phi, const Event& a) {
  return corner_from_bits(phi(a), phi(complement(a)));
}

namespace {
using CornerCounts = std::array<Count, 4>;
} // namespace

CensusReport census(const SampleSpace& space, const Event& a, SchemeFilter filter,
                    const Capacity& caps, unsigned jobs) {
  if (!(a.space() == space))
    throw Error(ErrorKind::SpaceMismatch, "census event lives in a different space");
  const CoeventEnumeration coevents(space, filter, caps);
  const Event not_a = complement(a);

  auto fold = [&](Count begin, Count end) {
    CornerCounts counts{};
    for (Count i = begin; i < end; ++i) {
      const Coevent phi = coevents.at(i);
      const Corner c = corner_from_bits(phi(a), phi(not_a));
      counts[static_cast<std::size_t>(c) - 1] += 1;
    }
    return counts;
  };
  auto merge = [](CornerCounts lhs, const CornerCounts& rhs) {
    for (std::size_t k = 0; k < 4; ++k) lhs[k] = checked_add(lhs[k], rhs[k]);
    return lhs;
  };

  CensusReport report{a, filter, detail::parallel_fold<CornerCounts>(coevents.size(), jobs, fold, merge), 0};
  for (Count c : report.corners) report.total = checked_add(report.total, c);
  return report;
}

bool deny_all(const Coevent& phi, std::span<const Event> cells) {
  for (const Event& cell : cells)
    if (phi(cell)) return false;
  return true;
}

DenialCensusReport denial_census(const SampleSpace& space, std::span<const Event> cells,
                                 SchemeFilter filter, const Capacity& caps, unsigned jobs) {
  for (const Event& cell : cells)
    if (!(cell.space() == space))
      throw Error(ErrorKind::SpaceMismatch, "denial census cell lives in a different space");
  const CoeventEnumeration coevents(space, filter, caps);

  auto fold = [&](Count begin, Count end) {
    Count deniers = 0;
    for (Count i = begin; i < end; ++i)
      if (deny_all(coevents.at(i), cells)) ++deniers;
    return deniers;
  };

  DenialCensusReport report;
  report.cells.assign(cells.begin(), cells.end());
  report.scheme = filter;
  report.deniers = detail::parallel_fold<Count>(coevents.size(), jobs, fold, checked_add);
  report.total = coevents.size();
  return report;
}

CausationTetralemma causation_tetralemma() {
  // Outcome i encodes the cause-subset with mask i over bits {self, other}.
  SampleSpace space = SampleSpace::make({"none", "self", "other", "both"});
  return CausationTetralemma{
      space,
      {space.singleton_event(1), space.singleton_event(2), space.singleton_event(3),
       space.singleton_event(0)},
  };
}

} // namespace koti
