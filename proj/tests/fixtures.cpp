#include "fixtures.hpp"

#include <sstream>

using namespace wlh;
using std::string;
using std::vector;

namespace fixtures {

LiftedTask make_blocksworld_task(const vector<vector<string>> &init_towers,
                                 const vector<vector<string>> &goal_towers,
                                 const string &name) {
    std::ostringstream out;
    out << "(define (problem " << name << ")\n  (:domain blocksworld)\n  (:objects";
    for (const auto &tower : init_towers)
        for (const auto &block : tower)
            out << ' ' << block;
    out << " - block)\n  (:init (arm-empty)";
    auto emit_towers = [&](const vector<vector<string>> &towers) {
        for (const auto &tower : towers) {
            out << " (on-table " << tower.front() << ")";
            for (size_t i = 1; i < tower.size(); ++i)
                out << " (on " << tower[i] << ' ' << tower[i - 1] << ")";
            out << " (clear " << tower.back() << ")";
        }
    };
    emit_towers(init_towers);
    out << ")\n  (:goal (and";
    for (const auto &tower : goal_towers) {
        out << " (on-table " << tower.front() << ")";
        for (size_t i = 1; i < tower.size(); ++i)
            out << " (on " << tower[i] << ' ' << tower[i - 1] << ")";
    }
    out << "))\n)\n";
    return parse_problem(out.str(), blocksworld_domain(), name);
}

namespace {

std::shared_ptr<const DomainDescription> qw_domain() {
    return parse_domain(R"((define (domain qw)
  (:requirements :strips)
  (:predicates (q ?x ?y) (w ?x ?y))
  (:action o
    :parameters (?x ?y)
    :precondition (and (q ?x ?y))
    :effect (and (w ?x ?y)))
)
)",
                        "qw-domain");
}

LiftedTask qw_task(const string &name, const string &init) {
    std::ostringstream out;
    out << "(define (problem " << name << ")\n  (:domain qw)\n"
        << "  (:objects a b)\n  (:init " << init << ")\n"
        << "  (:goal (and (w a b) (w b a)))\n)\n";
    return parse_problem(out.str(), qw_domain(), name);
}

}  // namespace

std::pair<LiftedTask, LiftedTask> qw_schema_pair() {
    return {qw_task("qw-1", "(q a a) (q b b)"),
            qw_task("qw-2", "(q a b) (q b a)")};
}

namespace {

std::shared_ptr<const DomainDescription> ternary_domain() {
    return parse_domain(R"((define (domain ternary)
  (:requirements :strips)
  (:predicates (p ?x ?y ?z))
)
)",
                        "ternary-domain");
}

LiftedTask ternary_task(const string &name, const string &init) {
    std::ostringstream out;
    out << "(define (problem " << name << ")\n  (:domain ternary)\n"
        << "  (:objects a b c d)\n  (:init " << init << ")\n"
        << "  (:goal (and (p a b c)))\n)\n";
    return parse_problem(out.str(), ternary_domain(), name);
}

}  // namespace

std::pair<LiftedTask, LiftedTask> ternary_pair() {
    return {ternary_task("ternary-1", "(p a b a) (p c b c) (p a d c) (p c d a)"),
            ternary_task("ternary-2", "(p a b c) (p c b a) (p a d a) (p c d c)")};
}

namespace {

std::shared_ptr<const DomainDescription> q_only_domain() {
    return parse_domain(R"((define (domain qgoal)
  (:requirements :strips)
  (:predicates (q ?x ?y))
)
)",
                        "qgoal-domain");
}

LiftedTask q_task(const string &name, const string &init) {
    std::ostringstream out;
    out << "(define (problem " << name << ")\n  (:domain qgoal)\n"
        << "  (:objects a b)\n  (:init " << init << ")\n"
        << "  (:goal (and (q a b) (q b a)))\n)\n";
    return parse_problem(out.str(), q_only_domain(), name);
}

}  // namespace

std::pair<LiftedTask, LiftedTask> achieved_goal_pair() {
    return {q_task("qgoal-1", "(q a a) (q b b)"),
            q_task("qgoal-2", "(q a b) (q b a)")};
}

}  // namespace fixtures
