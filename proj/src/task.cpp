#include "wlh/task.hpp"

#include <algorithm>
#include <sstream>

using namespace std;

namespace wlh {

State::State(vector<GroundAtom> atoms) : atoms_(move(atoms)) {
    sort(atoms_.begin(), atoms_.end());
    atoms_.erase(unique(atoms_.begin(), atoms_.end()), atoms_.end());
    index_.reserve(atoms_.size());
    index_.insert(atoms_.begin(), atoms_.end());
}

int DomainDescription::find_type(const string &name) const {
    for (size_t i = 0; i < types.size(); ++i)
        if (types[i] == name)
            return static_cast<int>(i);
    return -1;
}

int DomainDescription::find_predicate(const string &name) const {
    for (size_t i = 0; i < predicates.size(); ++i)
        if (predicates[i].name == name)
            return static_cast<int>(i);
    return -1;
}

bool DomainDescription::type_matches(int object_type, int param_type) const {
    for (int t = object_type; t != -1; t = type_parents[t])
        if (t == param_type)
            return true;
    return false;
}

int LiftedTask::find_object(const string &name) const {
    for (size_t i = 0; i < objects.size(); ++i)
        if (objects[i].name == name)
            return static_cast<int>(i);
    return -1;
}

void LiftedTask::check_atom(const GroundAtom &a) const {
    if (a.predicate < 0 || a.predicate >= static_cast<int>(domain->predicates.size()))
        throw ForeignAtomError("atom refers to unknown predicate id " +
                               to_string(a.predicate));
    const PredicateSchema &p = domain->predicates[a.predicate];
    if (static_cast<int>(a.args.size()) != p.arity())
        throw ForeignAtomError("atom for predicate '" + p.name + "' has " +
                               to_string(a.args.size()) + " arguments, expected " +
                               to_string(p.arity()));
    for (int o : a.args)
        if (o < 0 || o >= static_cast<int>(objects.size()))
            throw ForeignAtomError("atom for predicate '" + p.name +
                                   "' refers to unknown object id " + to_string(o));
}

string GroundAction::to_string(const LiftedTask &task) const {
    ostringstream out;
    out << '(' << task.domain->actions[schema].name;
    for (int o : binding)
        out << ' ' << task.object_name(o);
    out << ')';
    return out.str();
}

namespace {

GroundAtom instantiate(const SchemaAtom &atom, const vector<int> &binding) {
    GroundAtom g;
    g.predicate = atom.predicate;
    g.args.reserve(atom.args.size());
    for (const Term &t : atom.args)
        g.args.push_back(t.kind == Term::VARIABLE ? binding[t.index] : t.index);
    return g;
}

vector<GroundAtom> instantiate_all(const vector<SchemaAtom> &atoms,
                                   const vector<int> &binding) {
    vector<GroundAtom> out;
    out.reserve(atoms.size());
    for (const SchemaAtom &a : atoms)
        out.push_back(instantiate(a, binding));
    sort(out.begin(), out.end());
    out.erase(unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

vector<GroundAction> ground_actions(const LiftedTask &task,
                                    const GroundingLimits &limits) {
    const DomainDescription &domain = *task.domain;
    vector<GroundAction> result;

    // Candidate objects per type, sorted by name so bindings enumerate in
    // lexicographic order.
    vector<int> by_name(task.objects.size());
    for (size_t i = 0; i < by_name.size(); ++i)
        by_name[i] = static_cast<int>(i);
    sort(by_name.begin(), by_name.end(), [&](int a, int b) {
        return task.objects[a].name < task.objects[b].name;
    });

    for (size_t schema_index = 0; schema_index < domain.actions.size(); ++schema_index) {
        const ActionSchema &schema = domain.actions[schema_index];
        vector<vector<int>> candidates(schema.parameters.size());
        bool impossible = false;
        for (size_t p = 0; p < schema.parameters.size(); ++p) {
            for (int o : by_name)
                if (domain.type_matches(task.objects[o].type,
                                        schema.parameters[p].type))
                    candidates[p].push_back(o);
            if (candidates[p].empty())
                impossible = true;
        }
        if (impossible)
            continue;

        vector<int> binding(schema.parameters.size());
        vector<size_t> cursor(schema.parameters.size(), 0);
        while (true) {
            for (size_t p = 0; p < binding.size(); ++p)
                binding[p] = candidates[p][cursor[p]];

            if (result.size() >= limits.max_ground_actions)
                throw ResourceLimitError(
                    "ground action count exceeds cap of " +
                    to_string(limits.max_ground_actions));

            GroundAction action;
            action.schema = static_cast<int>(schema_index);
            action.binding = binding;
            action.preconditions = instantiate_all(schema.preconditions, binding);
            action.add_effects = instantiate_all(schema.add_effects, binding);
            action.delete_effects = instantiate_all(schema.delete_effects, binding);
            action.cost = schema.cost;
            result.push_back(move(action));

            if (binding.empty())
                break;
            size_t p = binding.size();
            while (p > 0) {
                --p;
                if (++cursor[p] < candidates[p].size())
                    break;
                cursor[p] = 0;
                if (p == 0)
                    goto schema_done;
            }
        }
    schema_done:;
    }
    return result;
}

bool applicable(const State &state, const GroundAction &action) {
    for (const GroundAtom &pre : action.preconditions)
        if (!state.contains(pre))
            return false;
    return true;
}

State apply(const State &state, const GroundAction &action) {
    if (!applicable(state, action))
        throw Error("action is not applicable in this state");
    vector<GroundAtom> atoms;
    atoms.reserve(state.size() + action.add_effects.size());
    // Delete first, then add: an atom in both add and del survives.
    set_difference(state.atoms().begin(), state.atoms().end(),
                   action.delete_effects.begin(), action.delete_effects.end(),
                   back_inserter(atoms));
    atoms.insert(atoms.end(), action.add_effects.begin(), action.add_effects.end());
    return State(move(atoms));
}

bool is_goal(const State &state, const LiftedTask &task) {
    for (const GroundAtom &g : task.goal.atoms())
        if (!state.contains(g))
            return false;
    return true;
}

GroundAtom make_atom(const LiftedTask &task, const string &predicate,
                     const vector<string> &args) {
    string pred = predicate;
    transform(pred.begin(), pred.end(), pred.begin(), ::tolower);
    int p = task.domain->find_predicate(pred);
    if (p == -1)
        throw ForeignAtomError("unknown predicate '" + pred + "'");
    GroundAtom atom;
    atom.predicate = p;
    for (string arg : args) {
        transform(arg.begin(), arg.end(), arg.begin(), ::tolower);
        int o = task.find_object(arg);
        if (o == -1)
            throw ForeignAtomError("unknown object '" + arg + "'");
        atom.args.push_back(o);
    }
    task.check_atom(atom);
    return atom;
}

string to_string(const LiftedTask &task, const GroundAtom &atom) {
    ostringstream out;
    out << '(' << task.predicate_name(atom.predicate);
    for (int o : atom.args)
        out << ' ' << task.object_name(o);
    out << ')';
    return out.str();
}

}  // namespace wlh
