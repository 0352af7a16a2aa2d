#ifndef WLH_TASK_HPP
#define WLH_TASK_HPP

#include "wlh/errors.hpp"
#include "wlh/hashing.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace wlh {

struct PredicateSchema {
    std::string name;
    std::vector<int> parameter_types;  // type ids; size == arity

    int arity() const { return static_cast<int>(parameter_types.size()); }
};

// Argument of a schema atom: a bound schema parameter or a constant object.
struct Term {
    enum Kind : std::uint8_t { VARIABLE, OBJECT };
    Kind kind;
    int index;  // parameter index or object id

    auto operator<=>(const Term &) const = default;
};

struct SchemaAtom {
    int predicate;
    std::vector<Term> args;
};

struct GroundAtom {
    int predicate;
    std::vector<int> args;  // object ids

    auto operator<=>(const GroundAtom &) const = default;
};

struct GroundAtomHash {
    std::size_t operator()(const GroundAtom &a) const {
        return hash_ints(a.args, hash_combine(0xcbf29ce484222325ULL,
                                              static_cast<std::uint64_t>(a.predicate)));
    }
};

// Set of ground atoms with O(1) expected membership and a canonical
// sorted order for deterministic iteration.
class State {
public:
    State() = default;
    explicit State(std::vector<GroundAtom> atoms);

    bool contains(const GroundAtom &a) const { return index_.count(a) > 0; }
    const std::vector<GroundAtom> &atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool operator==(const State &o) const { return atoms_ == o.atoms_; }

private:
    std::vector<GroundAtom> atoms_;  // sorted, unique
    std::unordered_set<GroundAtom, GroundAtomHash> index_;
};

struct TypedVariable {
    std::string name;  // "?x"
    int type;
};

struct ActionSchema {
    std::string name;
    std::vector<TypedVariable> parameters;
    std::vector<SchemaAtom> preconditions;
    std::vector<SchemaAtom> add_effects;
    std::vector<SchemaAtom> delete_effects;
    double cost = 1.0;
};

struct DomainDescription {
    std::string name;
    std::vector<std::string> types;    // type names; index 0 is "object"
    std::vector<int> type_parents;     // parent type id, -1 for the root
    std::vector<PredicateSchema> predicates;
    std::vector<std::string> constant_names;  // domain-level objects
    std::vector<int> constant_types;
    std::vector<ActionSchema> actions;

    int find_type(const std::string &name) const;
    int find_predicate(const std::string &name) const;
    // True iff an object of type `object_type` can bind a parameter of
    // type `param_type` (walks the type hierarchy upwards).
    bool type_matches(int object_type, int param_type) const;
};

struct ObjectInfo {
    std::string name;
    int type;
};

struct LiftedTask {
    std::string name;
    std::shared_ptr<const DomainDescription> domain;
    std::vector<ObjectInfo> objects;  // domain constants first, declaration order
    State init;
    State goal;

    int find_object(const std::string &name) const;
    const std::string &object_name(int id) const { return objects[id].name; }
    const std::string &predicate_name(int id) const {
        return domain->predicates[id].name;
    }
    // Throws ForeignAtomError if the atom's predicate/objects do not
    // belong to this task or the arity is wrong.
    void check_atom(const GroundAtom &a) const;
};

struct GroundAction {
    int schema;                // index into domain->actions
    std::vector<int> binding;  // object id per schema parameter
    std::vector<GroundAtom> preconditions;  // sorted
    std::vector<GroundAtom> add_effects;    // sorted
    std::vector<GroundAtom> delete_effects; // sorted
    double cost = 1.0;

    std::string to_string(const LiftedTask &task) const;  // "(name o1 ... ok)"
};

struct GroundingLimits {
    std::uint64_t max_ground_actions = 10'000'000;
};

// Every type-respecting binding of every schema, in schema order and
// name-lexicographic binding order. Throws ResourceLimitError past the cap.
std::vector<GroundAction> ground_actions(const LiftedTask &task,
                                         const GroundingLimits &limits = {});

bool applicable(const State &state, const GroundAction &action);

// (s \ del) ∪ add. Throws Error if the action is not applicable.
State apply(const State &state, const GroundAction &action);

bool is_goal(const State &state, const LiftedTask &task);

// Convenience used by tests and fixtures; all names normalized to lower case.
GroundAtom make_atom(const LiftedTask &task, const std::string &predicate,
                     const std::vector<std::string> &args);

std::string to_string(const LiftedTask &task, const GroundAtom &atom);

}  // namespace wlh

#endif
