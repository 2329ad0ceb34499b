#include "koti/dsl/interpret.hpp"

#include <unordered_map>

#include "koti/dsl/format.hpp"

namespace koti::dsl {

namespace {

struct Env {
  const ExecOptions& options;
  Report& report;
  std::optional<SampleSpace> space;
  std::unordered_map<std::string, Event> values; // events and props
  std::unordered_map<std::string, Coevent> coevents;

  const SampleSpace& require_space() const {
    if (!space) throw Error(ErrorKind::UseBeforeDecl, "no space declared");
    return *space;
  }

  Event eval(const Expr& e) const {
    const SampleSpace& sp = require_space();
    switch (e.kind()) {
      case Expr::Kind::Ref: {
        auto it = values.find(e.name());
        if (it == values.end())
          throw Error(ErrorKind::UseBeforeDecl, "\"" + e.name() + "\" is not declared");
        return it->second;
      }
      case Expr::Kind::SetLit: return sp.event_from_names(e.members());
      case Expr::Kind::Not: return complement(eval(e.child()));
      case Expr::Kind::And: return meet(eval(e.left()), eval(e.right()));
      case Expr::Kind::Or: return join(eval(e.left()), eval(e.right()));
      case Expr::Kind::Zero: return sp.zero_event();
      case Expr::Kind::One: return sp.unit_event();
    }
    throw std::logic_error("unreachable Expr kind");
  }

  const Coevent& coevent(const std::string& name) const {
    auto it = coevents.find(name);
    if (it == coevents.end())
      throw Error(ErrorKind::UseBeforeDecl, "\"" + name + "\" is not a declared coevent");
    return it->second;
  }

  std::vector<Event> eval_all(const std::vector<Expr>& exprs) const {
    std::vector<Event> events;
    events.reserve(exprs.size());
    for (const Expr& e : exprs) events.push_back(eval(e));
    return events;
  }

  void operator()(const SpaceDecl& s) {
    space = SampleSpace::make(s.outcomes);
    report.space = space;
    report.space_name = s.name;
  }

  void operator()(const EventDecl& s) { values.emplace(s.name, eval(s.expr)); }

  void operator()(const PropDecl& s) { values.emplace(s.name, eval(s.expr)); }

  void operator()(const CoeventDecl& s) {
    const SampleSpace& sp = require_space();
    switch (s.form) {
      case CoeventDecl::Form::Point:
        coevents.emplace(s.name, Coevent::point(sp, s.point_outcome));
        break;
      case CoeventDecl::Form::Support:
        coevents.emplace(s.name, Coevent::support(sp, s.support));
        break;
      case CoeventDecl::Form::Table:
        coevents.emplace(s.name, Coevent::table(sp, s.table_bits));
        break;
      case CoeventDecl::Form::Zero:
        coevents.emplace(s.name, Coevent::zero(sp));
        break;
    }
  }

  void operator()(const AssertStmt& s) {
    bool passed = false;
    if (s.form == AssertStmt::Form::Apply) {
      const bool value = coevent(s.coevent)(eval(*s.arg));
      passed = value == s.expected;
    } else {
      passed = eval(*s.lhs) == eval(*s.rhs);
    }
    report.asserts_total = checked_add(report.asserts_total, 1);
    if (!passed) report.asserts_failed = checked_add(report.asserts_failed, 1);
    report.rows.push_back(AssertRow{s.loc.line, s.loc.col, format(Stmt{s}), passed});
  }

  void operator()(const QueryStmt& s) {
    switch (s.form) {
      case QueryStmt::Form::Corner: {
        const Event a = eval(s.args[0]);
        report.rows.push_back(CornerRow{s.coevent, a, corner(coevent(s.coevent), a)});
        break;
      }
      case QueryStmt::Form::Census: {
        const Event a = eval(s.args[0]);
        report.rows.push_back(CensusRow{census(require_space(), a,
                                               s.scheme.value_or(SchemeFilter::All),
                                               options.caps, options.jobs)});
        break;
      }
      case QueryStmt::Form::DenyAll: {
        const std::vector<Event> cells = eval_all(s.args);
        report.rows.push_back(
            DenyAllRow{s.coevent, cells, deny_all(coevent(s.coevent), cells)});
        break;
      }
      case QueryStmt::Form::DenialCensus: {
        const std::vector<Event> cells = eval_all(s.args);
        report.rows.push_back(
            DenialCensusRow{denial_census(require_space(), cells,
                                          s.scheme.value_or(SchemeFilter::All), options.caps,
                                          options.jobs),
                            require_space().size()});
        break;
      }
      case QueryStmt::Form::Classify:
        report.rows.push_back(ClassifyRow{s.coevent, classify(coevent(s.coevent), options.caps)});
        break;
      case QueryStmt::Form::Nagarjuna: {
        const Event a = eval(s.args[0]);
        const SecondOrderSpace so = lift(require_space(), s.universe, options.caps);
        report.rows.push_back(
            NagarjunaRow{nagarjuna_census(so, a, s.scheme2, options.caps, options.jobs)});
        break;
      }
      case QueryStmt::Form::Causation: {
        const CausationTetralemma setup = causation_tetralemma();
        auto run = [&](SchemeFilter f) {
          return denial_census(setup.space, setup.cells, f, options.caps, options.jobs).deniers;
        };
        report.rows.push_back(CausationRow{setup, run(SchemeFilter::Homomorphic),
                                           run(SchemeFilter::Multiplicative),
                                           run(SchemeFilter::All)});
        break;
      }
    }
  }
};

SourceLoc stmt_loc(const Stmt& stmt) {
  return std::visit([](const auto& s) { return s.loc; }, stmt);
}

} // namespace

Report execute(const Script& script, const ExecOptions& options) {
  Report report;
  Env env{options, report, {}, {}, {}};
  for (const Stmt& stmt : script.statements) {
    try {
      std::visit(env, stmt);
    } catch (const ScriptError&) {
      throw;
    } catch (const Error& e) {
      throw ScriptError(e.kind(), stmt_loc(stmt), e.what());
    }
  }
  return report;
}

} // namespace koti::dsl
