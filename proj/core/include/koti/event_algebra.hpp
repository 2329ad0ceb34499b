#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "koti/bitmask.hpp"
#include "koti/errors.hpp"

namespace koti {

class Event;

// Ordered universe of named outcomes. Copies share immutable storage, so a
// SampleSpace is cheap to pass by value and safe to read concurrently.
class SampleSpace {
public:
  // Rejects an empty list (EmptySpace) and repeated names (DuplicateOutcome).
  static SampleSpace make(std::vector<std::string> outcomes);

  std::size_t size() const { return data_->outcomes.size(); }
  const std::vector<std::string>& outcomes() const { return data_->outcomes; }
  const std::string& outcome(std::size_t i) const { return data_->outcomes.at(i); }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const; // UnknownOutcome

  Event event(Bitmask members) const;
  Event event_from_index(std::uint64_t mask) const;
  Event event_from_names(std::span<const std::string> names) const;
  Event zero_event() const;
  Event unit_event() const;
  Event singleton_event(std::size_t outcome) const;

  // Same object or same outcome list.
  bool operator==(const SampleSpace& other) const {
    return data_ == other.data_ || data_->outcomes == other.data_->outcomes;
  }

private:
  struct Data {
    std::vector<std::string> outcomes;
    std::unordered_map<std::string, std::size_t> index;
  };

  explicit SampleSpace(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// Subset of a SampleSpace; bit i of the mask is membership of outcome i.
class Event {
public:
  const SampleSpace& space() const { return space_; }
  const Bitmask& members() const { return members_; }

  // Canonical event index: the membership mask read as an unsigned integer.
  std::uint64_t index() const { return members_.to_u64(); }

  std::size_t count() const { return members_.count(); }
  bool contains(std::size_t outcome) const { return members_.test(outcome); }
  bool is_zero() const { return members_.none(); }
  bool is_unit() const { return members_.all(); }
  bool is_proper() const { return !is_zero() && !is_unit(); }

  std::vector<std::string> member_names() const;
  std::string to_string() const; // "{a,b}"

  bool operator==(const Event& other) const {
    return space_ == other.space_ && members_ == other.members_;
  }

private:
  friend class SampleSpace;
  Event(SampleSpace space, Bitmask members)
      : space_(std::move(space)), members_(std::move(members)) {}

  SampleSpace space_;
  Bitmask members_;
};

Event complement(const Event& a);
Event meet(const Event& a, const Event& b); // SpaceMismatch
Event join(const Event& a, const Event& b); // SpaceMismatch

// Unasserted proposition syntax tree. Carries no space; atoms bind to events
// only at evaluation time.
class PropExpr {
public:
  enum class Kind { Atom, Not, And, Or, Zero, One };

  static PropExpr atom(std::string name);
  static PropExpr zero();
  static PropExpr one();
  static PropExpr negate(PropExpr expr);
  static PropExpr conj(PropExpr left, PropExpr right);
  static PropExpr disj(PropExpr left, PropExpr right);

  Kind kind() const;
  const std::string& name() const; // Atom
  PropExpr child() const;          // Not
  PropExpr left() const;           // And/Or
  PropExpr right() const;          // And/Or

private:
  struct Node;
  explicit PropExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using Bindings = std::unordered_map<std::string, Event>;

// Classical set semantics; UnboundAtom when an atom has no binding.
Event eval_prop(const PropExpr& expr, const Bindings& bindings, const SampleSpace& space);

} // namespace koti
