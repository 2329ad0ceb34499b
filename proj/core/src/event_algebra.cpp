#include "koti/event_algebra.hpp"

#include <sstream>

namespace koti {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptySpace: return "empty space";
    case ErrorKind::DuplicateOutcome: return "duplicate outcome";
    case ErrorKind::UnknownOutcome: return "unknown outcome";
    case ErrorKind::SpaceMismatch: return "space mismatch";
    case ErrorKind::UnboundAtom: return "unbound atom";
    case ErrorKind::EmptySupport: return "empty support";
    case ErrorKind::TableLengthMismatch: return "table length mismatch";
    case ErrorKind::CapacityExceeded: return "capacity exceeded";
    case ErrorKind::LexError: return "lex error";
    case ErrorKind::ParseError: return "parse error";
    case ErrorKind::DuplicateName: return "duplicate name";
    case ErrorKind::UseBeforeDecl: return "use before declaration";
  }
  return "error";
}

Count checked_add(Count a, Count b) {
  if (b > ~Count{0} - a)
    throw Error(ErrorKind::CapacityExceeded, "census count overflows 64-bit counter");
  return a + b;
}

Count checked_pow2(std::size_t exponent) {
  if (exponent >= 64)
    throw Error(ErrorKind::CapacityExceeded,
                "2^" + std::to_string(exponent) + " overflows 64-bit counter");
  return Count{1} << exponent;
}

SampleSpace SampleSpace::make(std::vector<std::string> outcomes) {
  if (outcomes.empty())
    throw Error(ErrorKind::EmptySpace, "sample space needs at least one outcome");
  auto data = std::make_shared<Data>();
  data->index.reserve(outcomes.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto [it, inserted] = data->index.emplace(outcomes[i], i);
    if (!inserted)
      throw Error(ErrorKind::DuplicateOutcome, "duplicate outcome \"" + outcomes[i] + "\"");
  }
  data->outcomes = std::move(outcomes);
  return SampleSpace(std::move(data));
}

std::optional<std::size_t> SampleSpace::find(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t SampleSpace::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownOutcome, "unknown outcome \"" + std::string(name) + "\"");
}

Event SampleSpace::event(Bitmask members) const {
  if (members.size() != size())
    throw std::logic_error("event mask length does not match space size");
  return Event(*this, std::move(members));
}

Event SampleSpace::event_from_index(std::uint64_t mask) const {
  return event(Bitmask::from_u64(size(), mask));
}

Event SampleSpace::event_from_names(std::span<const std::string> names) const {
  Bitmask m(size());
  for (const auto& name : names) m.set(index_of(name));
  return event(std::move(m));
}

Event SampleSpace::zero_event() const { return event(Bitmask(size())); }

Event SampleSpace::unit_event() const { return event(Bitmask::ones(size())); }

Event SampleSpace::singleton_event(std::size_t outcome) const {
  return event(Bitmask::singleton(size(), outcome));
}

std::vector<std::string> Event::member_names() const {
  std::vector<std::string> names;
  names.reserve(count());
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_.test(i)) names.push_back(space_.outcome(i));
  return names;
}

std::string Event::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!members_.test(i)) continue;
    if (!first) out << ',';
    out << space_.outcome(i);
    first = false;
  }
  out << '}';
  return out.str();
}

namespace {

void check_same_space(const Event& a, const Event& b) {
  if (!(a.space() == b.space()))
    throw Error(ErrorKind::SpaceMismatch, "events live in different sample spaces");
}

} // namespace

Event complement(const Event& a) { return a.space().event(~a.members()); }

Event meet(const Event& a, const Event& b) {
  check_same_space(a, b);
  return a.space().event(a.members() & b.members());
}

Event join(const Event& a, const Event& b) {
  check_same_space(a, b);
  return a.space().event(a.members() | b.members());
}

struct PropExpr::Node {
  Kind kind;
  std::string name;                   // Atom
  std::shared_ptr<const Node> child;  // Not
  std::shared_ptr<const Node> left;   // And/Or
  std::shared_ptr<const Node> right;
};

PropExpr PropExpr::atom(std::string name) {
  return PropExpr(std::make_shared<Node>(Node{Kind::Atom, std::move(name), {}, {}, {}}));
}

PropExpr PropExpr::zero() {
  return PropExpr(std::make_shared<Node>(Node{Kind::Zero, {}, {}, {}, {}}));
}

PropExpr PropExpr::one() {
  return PropExpr(std::make_shared<Node>(Node{Kind::One, {}, {}, {}, {}}));
}

PropExpr PropExpr::negate(PropExpr expr) {
  return PropExpr(std::make_shared<Node>(Node{Kind::Not, {}, std::move(expr.node_), {}, {}}));
}

PropExpr PropExpr::conj(PropExpr left, PropExpr right) {
  return PropExpr(
      std::make_shared<Node>(Node{Kind::And, {}, {}, std::move(left.node_), std::move(right.node_)}));
}

PropExpr PropExpr::disj(PropExpr left, PropExpr right) {
  return PropExpr(
      std::make_shared<Node>(Node{Kind::Or, {}, {}, std::move(left.node_), std::move(right.node_)}));
}

PropExpr::Kind PropExpr::kind() const { return node_->kind; }
const std::string& PropExpr::name() const { return node_->name; }
PropExpr PropExpr::child() const { return PropExpr(node_->child); }
PropExpr PropExpr::left() const { return PropExpr(node_->left); }
PropExpr PropExpr::right() const { return PropExpr(node_->right); }

Event eval_prop(const PropExpr& expr, const Bindings& bindings, const SampleSpace& space) {
  switch (expr.kind()) {
    case PropExpr::Kind::Zero: return space.zero_event();
    case PropExpr::Kind::One: return space.unit_event();
    case PropExpr::Kind::Atom: {
      auto it = bindings.find(expr.name());
      if (it == bindings.end())
        throw Error(ErrorKind::UnboundAtom, "unbound atom \"" + expr.name() + "\"");
      if (!(it->second.space() == space))
        throw Error(ErrorKind::SpaceMismatch,
                    "atom \"" + expr.name() + "\" is bound to an event of another space");
      return it->second;
    }
    case PropExpr::Kind::Not: return complement(eval_prop(expr.child(), bindings, space));
    case PropExpr::Kind::And:
      return meet(eval_prop(expr.left(), bindings, space),
                  eval_prop(expr.right(), bindings, space));
    case PropExpr::Kind::Or:
      return join(eval_prop(expr.left(), bindings, space),
                  eval_prop(expr.right(), bindings, space));
  }
  throw std::logic_error("unreachable PropExpr kind");
}

} // namespace koti
