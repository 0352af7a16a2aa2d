#ifndef WLH_TESTS_FIXTURES_HPP
#define WLH_TESTS_FIXTURES_HPP

#include "wlh/pddl.hpp"
#include "wlh/task.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

inline std::string blocksworld_domain_text() {
    return R"((define (domain blocksworld)
  (:requirements :strips :typing)
  (:types block - object)
  (:predicates (on ?x - block ?y - block) (on-table ?x - block)
               (clear ?x - block) (arm-empty) (holding ?x - block))
  (:action pickup
    :parameters (?x - block)
    :precondition (and (clear ?x) (on-table ?x) (arm-empty))
    :effect (and (holding ?x) (not (clear ?x)) (not (on-table ?x)) (not (arm-empty))))
  (:action putdown
    :parameters (?x - block)
    :precondition (and (holding ?x))
    :effect (and (clear ?x) (arm-empty) (on-table ?x) (not (holding ?x))))
  (:action stack
    :parameters (?x - block ?y - block)
    :precondition (and (clear ?y) (holding ?x))
    :effect (and (arm-empty) (clear ?x) (on ?x ?y) (not (clear ?y)) (not (holding ?x))))
  (:action unstack
    :parameters (?x - block ?y - block)
    :precondition (and (on ?x ?y) (clear ?x) (arm-empty))
    :effect (and (holding ?x) (clear ?y) (not (on ?x ?y)) (not (clear ?x)) (not (arm-empty))))
)
)";
}

inline std::shared_ptr<const wlh::DomainDescription> blocksworld_domain() {
    return wlh::parse_domain(blocksworld_domain_text(), "blocksworld-domain");
}

// Fig. 3 scene: tower a/b/c on the table, goal is c stacked on a.
inline wlh::LiftedTask blocksworld_three_block_task() {
    return wlh::parse_problem(R"((define (problem bw-3)
  (:domain blocksworld)
  (:objects a b c - block)
  (:init (on a b) (on b c) (on-table c) (clear a) (arm-empty))
  (:goal (and (on c a)))
)
)",
                              blocksworld_domain(), "bw-3");
}

// Builds a blocksworld task from tower descriptions; towers are listed
// bottom-up, e.g. {{"a","b"},{"c"}} puts b on a and c on the table.
wlh::LiftedTask make_blocksworld_task(
    const std::vector<std::vector<std::string>> &init_towers,
    const std::vector<std::vector<std::string>> &goal_towers,
    const std::string &name = "bw");

// Pair of tasks with schema o = <{x,y}, {Q(x,y)}, {W(x,y)}, {}> and goal
// {W(a,b), W(b,a)}; starts {Q(a,a),Q(b,b)} vs {Q(a,b),Q(b,a)}. The first
// is unsolvable, the second has optimal cost 2, and their graph encodings
// are WL-indistinguishable.
std::pair<wlh::LiftedTask, wlh::LiftedTask> qw_schema_pair();

// Pair over one ternary predicate, no actions, goal {P(a,b,c)}; the first
// is unsolvable, the second already satisfies its goal.
std::pair<wlh::LiftedTask, wlh::LiftedTask> ternary_pair();

// Pair with goal {Q(a,b),Q(b,a)} and starts {Q(a,a),Q(b,b)} vs the goal
// itself; distinguishing them requires the achieved-goal colour.
std::pair<wlh::LiftedTask, wlh::LiftedTask> achieved_goal_pair();

}  // namespace fixtures

#endif
