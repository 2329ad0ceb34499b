#include "koti/second_order.hpp"

#include "parallel.hpp"

namespace koti {

SecondOrderSpace::SecondOrderSpace(SampleSpace base, SchemeFilter universe, SampleSpace as_space,
                                   std::vector<Coevent> outcomes)
    : base_(std::move(base)), universe_(universe), as_space_(std::move(as_space)),
      outcomes_(std::move(outcomes)) {}

SecondOrderSpace SecondOrderSpace::lift(const SampleSpace& base, SchemeFilter universe,
                                        const Capacity& caps) {
  const std::size_t n = base.size();
  std::size_t cap = 0;
  switch (universe) {
    case SchemeFilter::All: cap = std::min(kLiftAllCap, caps.dense_cap()); break;
    case SchemeFilter::Multiplicative: cap = kLiftMultiplicativeCap; break;
    case SchemeFilter::Homomorphic: cap = kLiftHomomorphicCap; break;
  }
  if (n > cap)
    throw Error(ErrorKind::CapacityExceeded,
                "lift with universe \"" + std::string(to_string(universe)) +
                    "\" accepts base spaces up to " + std::to_string(cap) +
                    " outcomes, got " + std::to_string(n));

  const CoeventEnumeration coevents(base, universe, caps);
  std::vector<Coevent> outcomes;
  std::vector<std::string> labels;
  outcomes.reserve(static_cast<std::size_t>(coevents.size()));
  labels.reserve(static_cast<std::size_t>(coevents.size()));
  for (Count i = 0; i < coevents.size(); ++i) {
    Coevent phi = coevents.at(i);
    labels.push_back("phi_" + std::to_string(i) + "_" +
                     std::to_string(phi.dense_table().to_u64()));
    outcomes.push_back(std::move(phi));
  }
  return SecondOrderSpace(base, universe, SampleSpace::make(std::move(labels)),
                          std::move(outcomes));
}

Event SecondOrderSpace::corner_event(const Event& base_event, Corner c) const {
  if (!(base_event.space() == base_))
    throw Error(ErrorKind::SpaceMismatch, "corner event argument must live in the base space");
  const Event not_event = complement(base_event);
  Bitmask members(outcomes_.size());
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    const Coevent& phi = outcomes_[i];
    if (corner_from_bits(phi(base_event), phi(not_event)) == c) members.set(i);
  }
  return as_space_.event(std::move(members));
}

bool nagarjuna_denies(const SecondOrderSpace& so, const Coevent& psi, const Event& base_event) {
  if (!(psi.space() == so.as_space()))
    throw Error(ErrorKind::SpaceMismatch, "second-order coevent must live over the lifted space");
  for (Corner c : {Corner::C1, Corner::C2, Corner::C3, Corner::C4})
    if (psi(so.corner_event(base_event, c))) return false;
  return true;
}

NagarjunaReport nagarjuna_census(const SecondOrderSpace& so, const Event& base_event,
                                 SchemeFilter scheme2, const Capacity& caps, unsigned jobs) {
  if (!(base_event.space() == so.base()))
    throw Error(ErrorKind::SpaceMismatch, "census event must live in the base space");
  if (scheme2 == SchemeFilter::Multiplicative && so.size() > kNagarjunaSupportScanCap)
    throw Error(ErrorKind::CapacityExceeded,
                "second-order support scan cap is " + std::to_string(kNagarjunaSupportScanCap) +
                    " outcomes, got " + std::to_string(so.size()));
  const CoeventEnumeration psis(so.as_space(), scheme2, caps);

  std::array<Event, 4> cells = {
      so.corner_event(base_event, Corner::C1), so.corner_event(base_event, Corner::C2),
      so.corner_event(base_event, Corner::C3), so.corner_event(base_event, Corner::C4)};

  auto count_range = [&](Count begin, Count end) {
    Count deniers = 0;
    for (Count i = begin; i < end; ++i) {
      const Coevent psi = psis.at(i);
      bool denies = true;
      for (const Event& cell : cells) {
        if (psi(cell)) {
          denies = false;
          break;
        }
      }
      if (denies) ++deniers;
    }
    return deniers;
  };

  const Count deniers =
      detail::parallel_fold<Count>(psis.size(), jobs, count_range, checked_add);
  return NagarjunaReport{base_event, so.universe(), scheme2, deniers, psis.size()};
}

} // namespace koti
