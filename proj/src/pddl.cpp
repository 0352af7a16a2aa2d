#include "wlh/pddl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

using namespace std;

namespace wlh {

namespace {

struct Token {
    enum Kind { LPAREN, RPAREN, SYMBOL, END };
    Kind kind;
    string text;
    int line;
    int column;
};

class Lexer {
public:
    Lexer(const string &text, string filename)
        : text_(text), filename_(move(filename)) {}

    const Token &peek() {
        if (!has_current_) {
            current_ = scan();
            has_current_ = true;
        }
        return current_;
    }

    Token next() {
        Token t = peek();
        has_current_ = false;
        return t;
    }

    [[noreturn]] void fail(const Token &at, const string &msg) const {
        throw ParseError(filename_, at.line, at.column, msg);
    }

    [[noreturn]] void fail_unsupported(const Token &at, const string &construct) const {
        throw UnsupportedRequirementError(filename_, at.line, at.column, construct);
    }

    const string &filename() const { return filename_; }

private:
    Token scan() {
        for (;;) {
            if (pos_ >= text_.size())
                return {Token::END, "", line_, column_};
            char c = text_[pos_];
            if (c == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
                continue;
            }
            if (isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            break;
        }
        int line = line_;
        int column = column_;
        char c = text_[pos_];
        if (c == '(') {
            advance();
            return {Token::LPAREN, "(", line, column};
        }
        if (c == ')') {
            advance();
            return {Token::RPAREN, ")", line, column};
        }
        string sym;
        while (pos_ < text_.size()) {
            c = text_[pos_];
            if (c == '(' || c == ')' || c == ';' ||
                isspace(static_cast<unsigned char>(c)))
                break;
            sym.push_back(static_cast<char>(tolower(static_cast<unsigned char>(c))));
            advance();
        }
        return {Token::SYMBOL, sym, line, column};
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    const string &text_;
    string filename_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_;
    bool has_current_ = false;
};

class Parser {
public:
    Parser(const string &text, const string &filename) : lex_(text, filename) {}

    shared_ptr<const DomainDescription> parse_domain() {
        auto domain = make_shared<DomainDescription>();
        domain->types = {"object"};
        domain->type_parents = {-1};

        expect(Token::LPAREN);
        expect_symbol("define");
        expect(Token::LPAREN);
        expect_symbol("domain");
        domain->name = expect(Token::SYMBOL).text;
        expect(Token::RPAREN);

        while (lex_.peek().kind == Token::LPAREN) {
            Token open = lex_.next();
            Token head = expect(Token::SYMBOL);
            if (head.text == ":requirements") {
                parse_requirements();
            } else if (head.text == ":types") {
                parse_types(*domain);
            } else if (head.text == ":constants") {
                parse_constants(*domain);
            } else if (head.text == ":predicates") {
                parse_predicates(*domain);
            } else if (head.text == ":action") {
                parse_action(*domain);
            } else if (head.text == ":functions" || head.text == ":axioms" ||
                       head.text == ":derived") {
                lex_.fail_unsupported(head, head.text);
            } else {
                lex_.fail(head, "unexpected section '" + head.text + "'");
            }
            (void)open;
        }
        expect(Token::RPAREN);
        expect_end();
        return domain;
    }

    LiftedTask parse_problem(shared_ptr<const DomainDescription> domain) {
        LiftedTask task;
        task.domain = move(domain);
        for (size_t i = 0; i < task.domain->constant_names.size(); ++i)
            task.objects.push_back(
                {task.domain->constant_names[i], task.domain->constant_types[i]});

        expect(Token::LPAREN);
        expect_symbol("define");
        expect(Token::LPAREN);
        expect_symbol("problem");
        task.name = expect(Token::SYMBOL).text;
        expect(Token::RPAREN);

        vector<GroundAtom> init_atoms;
        vector<GroundAtom> goal_atoms;
        while (lex_.peek().kind == Token::LPAREN) {
            lex_.next();
            Token head = expect(Token::SYMBOL);
            if (head.text == ":domain") {
                Token name = expect(Token::SYMBOL);
                if (name.text != task.domain->name)
                    lex_.fail(name, "problem expects domain '" + name.text +
                                        "' but '" + task.domain->name +
                                        "' was parsed");
                expect(Token::RPAREN);
            } else if (head.text == ":requirements") {
                parse_requirements();
            } else if (head.text == ":objects") {
                parse_objects(task);
            } else if (head.text == ":init") {
                while (lex_.peek().kind == Token::LPAREN) {
                    lex_.next();
                    init_atoms.push_back(parse_ground_atom(task));
                }
                expect(Token::RPAREN);
            } else if (head.text == ":goal") {
                parse_goal(task, goal_atoms);
            } else if (head.text == ":metric") {
                lex_.fail_unsupported(head, ":metric");
            } else {
                lex_.fail(head, "unexpected section '" + head.text + "'");
            }
        }
        expect(Token::RPAREN);
        expect_end();

        task.init = State(move(init_atoms));
        task.goal = State(move(goal_atoms));
        return task;
    }

private:
    Token expect(Token::Kind kind) {
        Token t = lex_.next();
        if (t.kind != kind) {
            static const char *names[] = {"'('", "')'", "symbol", "end of input"};
            lex_.fail(t, string("expected ") + names[kind] + ", got '" +
                             (t.kind == Token::END ? "end of input" : t.text) + "'");
        }
        return t;
    }

    void expect_symbol(const string &text) {
        Token t = expect(Token::SYMBOL);
        if (t.text != text)
            lex_.fail(t, "expected '" + text + "', got '" + t.text + "'");
    }

    void expect_end() {
        Token t = lex_.next();
        if (t.kind != Token::END)
            lex_.fail(t, "trailing content after closing parenthesis");
    }

    void parse_requirements() {
        for (;;) {
            Token t = lex_.next();
            if (t.kind == Token::RPAREN)
                return;
            if (t.kind != Token::SYMBOL)
                lex_.fail(t, "malformed :requirements list");
            if (t.text != ":strips" && t.text != ":typing")
                lex_.fail_unsupported(t, t.text);
        }
    }

    // name+ [- type] repeated until ')'; calls sink(name, type_id).
    template <typename Sink>
    void parse_typed_list(const DomainDescription &domain, Sink sink) {
        vector<Token> pending;
        for (;;) {
            Token t = lex_.next();
            if (t.kind == Token::RPAREN) {
                for (const Token &name : pending)
                    sink(name, 0);  // untyped defaults to object
                return;
            }
            if (t.kind != Token::SYMBOL)
                lex_.fail(t, "malformed typed list");
            if (t.text == "-") {
                Token type_token = expect(Token::SYMBOL);
                int type = domain.find_type(type_token.text);
                if (type == -1)
                    lex_.fail(type_token,
                              "undeclared type '" + type_token.text + "'");
                if (pending.empty())
                    lex_.fail(t, "dangling '-' in typed list");
                for (const Token &name : pending)
                    sink(name, type);
                pending.clear();
            } else {
                pending.push_back(t);
            }
        }
    }

    void parse_types(DomainDescription &domain) {
        // Names in a :types list may themselves be parents declared later,
        // so collect pairs first.
        vector<pair<Token, Token>> declared;  // (type, parent); parent "" = object
        vector<Token> pending;
        for (;;) {
            Token t = lex_.next();
            if (t.kind == Token::RPAREN)
                break;
            if (t.kind != Token::SYMBOL)
                lex_.fail(t, "malformed :types list");
            if (t.text == "-") {
                Token parent = expect(Token::SYMBOL);
                for (const Token &name : pending)
                    declared.emplace_back(name, parent);
                pending.clear();
            } else {
                pending.push_back(t);
            }
        }
        for (const Token &name : pending)
            declared.emplace_back(name, Token{Token::SYMBOL, "object", name.line,
                                              name.column});

        for (const auto &[name, parent] : declared) {
            if (domain.find_type(name.text) == -1) {
                domain.types.push_back(name.text);
                domain.type_parents.push_back(0);
            }
        }
        for (const auto &[name, parent] : declared) {
            if (domain.find_type(parent.text) == -1) {
                domain.types.push_back(parent.text);
                domain.type_parents.push_back(0);
            }
            int t = domain.find_type(name.text);
            if (t == 0)
                lex_.fail(name, "cannot re-declare type 'object'");
            domain.type_parents[t] = domain.find_type(parent.text);
        }
    }

    void parse_constants(DomainDescription &domain) {
        parse_typed_list(domain, [&](const Token &name, int type) {
            for (const string &existing : domain.constant_names)
                if (existing == name.text)
                    lex_.fail(name, "duplicate constant '" + name.text + "'");
            domain.constant_names.push_back(name.text);
            domain.constant_types.push_back(type);
        });
    }

    void parse_predicates(DomainDescription &domain) {
        while (lex_.peek().kind == Token::LPAREN) {
            lex_.next();
            Token name = expect(Token::SYMBOL);
            if (name.text == "=")
                lex_.fail_unsupported(name, ":equality");
            if (domain.find_predicate(name.text) != -1)
                lex_.fail(name, "duplicate predicate '" + name.text + "'");
            PredicateSchema pred;
            pred.name = name.text;
            parse_typed_list(domain, [&](const Token &, int type) {
                pred.parameter_types.push_back(type);
            });
            domain.predicates.push_back(move(pred));
        }
        expect(Token::RPAREN);
    }

    void parse_action(DomainDescription &domain) {
        ActionSchema schema;
        schema.name = expect(Token::SYMBOL).text;
        for (const ActionSchema &existing : domain.actions)
            if (existing.name == schema.name)
                lex_.fail(lex_.peek(), "duplicate action '" + schema.name + "'");

        unordered_map<string, int> param_ids;
        for (;;) {
            Token t = lex_.next();
            if (t.kind == Token::RPAREN)
                break;
            if (t.kind != Token::SYMBOL)
                lex_.fail(t, "malformed action body");
            if (t.text == ":parameters") {
                expect(Token::LPAREN);
                parse_typed_list(domain, [&](const Token &name, int type) {
                    if (name.text.empty() || name.text[0] != '?')
                        lex_.fail(name, "action parameter must start with '?'");
                    if (param_ids.count(name.text))
                        lex_.fail(name, "duplicate parameter '" + name.text + "'");
                    param_ids[name.text] = static_cast<int>(schema.parameters.size());
                    schema.parameters.push_back({name.text, type});
                });
            } else if (t.text == ":precondition") {
                parse_condition(domain, param_ids, schema.preconditions);
            } else if (t.text == ":effect") {
                parse_effect(domain, param_ids, schema);
            } else {
                lex_.fail(t, "unexpected keyword '" + t.text + "' in action");
            }
        }
        domain.actions.push_back(move(schema));
    }

    SchemaAtom parse_schema_atom(DomainDescription &domain,
                                 const unordered_map<string, int> &params,
                                 const Token &name) {
        if (domain.find_predicate(name.text) == -1)
            lex_.fail(name, "undeclared predicate '" + name.text + "'");
        SchemaAtom atom;
        atom.predicate = domain.find_predicate(name.text);
        for (;;) {
            Token t = lex_.next();
            if (t.kind == Token::RPAREN)
                break;
            if (t.kind != Token::SYMBOL)
                lex_.fail(t, "malformed atom");
            Term term;
            if (!t.text.empty() && t.text[0] == '?') {
                auto it = params.find(t.text);
                if (it == params.end())
                    lex_.fail(t, "unbound variable '" + t.text + "'");
                term = {Term::VARIABLE, it->second};
            } else {
                int c = -1;
                for (size_t i = 0; i < domain.constant_names.size(); ++i)
                    if (domain.constant_names[i] == t.text)
                        c = static_cast<int>(i);
                if (c == -1)
                    lex_.fail(t, "undeclared object '" + t.text + "'");
                term = {Term::OBJECT, c};
            }
            atom.args.push_back(term);
        }
        const PredicateSchema &pred = domain.predicates[atom.predicate];
        if (static_cast<int>(atom.args.size()) != pred.arity())
            lex_.fail(name, "arity mismatch: predicate '" + pred.name + "' takes " +
                                to_string(pred.arity()) + " arguments, got " +
                                to_string(atom.args.size()));
        return atom;
    }

    // Positive conjunction: (pred ...), (and ...), or ().
    void parse_condition(DomainDescription &domain,
                         const unordered_map<string, int> &params,
                         vector<SchemaAtom> &out) {
        expect(Token::LPAREN);
        Token head = lex_.peek();
        if (head.kind == Token::RPAREN) {  // empty condition
            lex_.next();
            return;
        }
        Token name = expect(Token::SYMBOL);
        if (name.text == "and") {
            while (lex_.peek().kind == Token::LPAREN) {
                lex_.next();
                Token inner = expect(Token::SYMBOL);
                check_supported_condition(inner);
                out.push_back(parse_schema_atom(domain, params, inner));
            }
            expect(Token::RPAREN);
        } else {
            check_supported_condition(name);
            out.push_back(parse_schema_atom(domain, params, name));
        }
    }

    void check_supported_condition(const Token &head) {
        static const unordered_set<string> adl = {
            "not", "or",     "imply",  "exists", "forall",
            "=",   "when",   "increase", "decrease", "assign"};
        if (adl.count(head.text))
            lex_.fail_unsupported(head, head.text);
    }

    void parse_effect(DomainDescription &domain,
                      const unordered_map<string, int> &params,
                      ActionSchema &schema) {
        expect(Token::LPAREN);
        if (lex_.peek().kind == Token::RPAREN) {
            lex_.next();
            return;
        }
        Token name = expect(Token::SYMBOL);
        if (name.text == "and") {
            while (lex_.peek().kind == Token::LPAREN) {
                lex_.next();
                parse_single_effect(domain, params, schema);
            }
            expect(Token::RPAREN);
        } else {
            parse_single_effect_named(domain, params, schema, name);
        }
    }

    void parse_single_effect(DomainDescription &domain,
                             const unordered_map<string, int> &params,
                             ActionSchema &schema) {
        Token name = expect(Token::SYMBOL);
        parse_single_effect_named(domain, params, schema, name);
    }

    void parse_single_effect_named(DomainDescription &domain,
                                   const unordered_map<string, int> &params,
                                   ActionSchema &schema, const Token &name) {
        if (name.text == "not") {
            expect(Token::LPAREN);
            Token inner = expect(Token::SYMBOL);
            check_supported_condition(inner);
            schema.delete_effects.push_back(parse_schema_atom(domain, params, inner));
            expect(Token::RPAREN);
            return;
        }
        if (name.text == "when" || name.text == "forall" || name.text == "increase" ||
            name.text == "decrease" || name.text == "assign" || name.text == "oneof")
            lex_.fail_unsupported(name, name.text);
        schema.add_effects.push_back(parse_schema_atom(domain, params, name));
    }

    void parse_objects(LiftedTask &task) {
        parse_typed_list(*task.domain, [&](const Token &name, int type) {
            if (task.find_object(name.text) != -1)
                lex_.fail(name, "duplicate object '" + name.text + "'");
            task.objects.push_back({name.text, type});
        });
    }

    // Parses "name arg* )"; the opening paren was already consumed.
    GroundAtom parse_ground_atom(const LiftedTask &task) {
        Token name = expect(Token::SYMBOL);
        if (name.text == "=" || name.text == "not")
            lex_.fail_unsupported(name, name.text);
        int p = task.domain->find_predicate(name.text);
        if (p == -1)
            lex_.fail(name, "undeclared predicate '" + name.text + "'");
        GroundAtom atom;
        atom.predicate = p;
        for (;;) {
            Token t = lex_.next();
            if (t.kind == Token::RPAREN)
                break;
            if (t.kind != Token::SYMBOL)
                lex_.fail(t, "malformed atom");
            int o = task.find_object(t.text);
            if (o == -1)
                lex_.fail(t, "undeclared object '" + t.text + "'");
            atom.args.push_back(o);
        }
        const PredicateSchema &pred = task.domain->predicates[p];
        if (static_cast<int>(atom.args.size()) != pred.arity())
            lex_.fail(name, "arity mismatch: predicate '" + pred.name + "' takes " +
                                to_string(pred.arity()) + " arguments, got " +
                                to_string(atom.args.size()));
        return atom;
    }

    void parse_goal(LiftedTask &task, vector<GroundAtom> &out) {
        expect(Token::LPAREN);
        if (lex_.peek().kind == Token::RPAREN) {  // (:goal ())
            lex_.next();
            expect(Token::RPAREN);
            return;
        }
        Token name = expect(Token::SYMBOL);
        if (name.text == "and") {
            while (lex_.peek().kind == Token::LPAREN) {
                lex_.next();
                out.push_back(parse_ground_atom(task));
            }
            expect(Token::RPAREN);
            expect(Token::RPAREN);
        } else {
            check_supported_condition(name);
            // Single-atom goal: re-parse with the name already consumed.
            int p = task.domain->find_predicate(name.text);
            if (p == -1)
                lex_.fail(name, "undeclared predicate '" + name.text + "'");
            GroundAtom atom;
            atom.predicate = p;
            for (;;) {
                Token t = lex_.next();
                if (t.kind == Token::RPAREN)
                    break;
                if (t.kind != Token::SYMBOL)
                    lex_.fail(t, "malformed atom");
                int o = task.find_object(t.text);
                if (o == -1)
                    lex_.fail(t, "undeclared object '" + t.text + "'");
                atom.args.push_back(o);
            }
            const PredicateSchema &pred = task.domain->predicates[p];
            if (static_cast<int>(atom.args.size()) != pred.arity())
                lex_.fail(name, "arity mismatch: predicate '" + pred.name +
                                    "' takes " + to_string(pred.arity()) +
                                    " arguments, got " + to_string(atom.args.size()));
            out.push_back(move(atom));
            expect(Token::RPAREN);
        }
    }

    Lexer lex_;
};

}  // namespace

shared_ptr<const DomainDescription> parse_domain(const string &text,
                                                 const string &filename) {
    Parser parser(text, filename);
    return parser.parse_domain();
}

LiftedTask parse_problem(const string &text,
                         shared_ptr<const DomainDescription> domain,
                         const string &filename) {
    Parser parser(text, filename);
    return parser.parse_problem(move(domain));
}

namespace {

string read_file(const string &path) {
    ifstream in(path, ios::binary);
    if (!in)
        throw Error("cannot open file: " + path);
    ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

shared_ptr<const DomainDescription> parse_domain_file(const string &path) {
    return parse_domain(read_file(path), path);
}

LiftedTask parse_problem_file(const string &path,
                              shared_ptr<const DomainDescription> domain) {
    return parse_problem(read_file(path), move(domain), path);
}

namespace {

void print_typed_names(ostream &out, const DomainDescription &domain,
                       const vector<string> &names, const vector<int> &types) {
    for (size_t i = 0; i < names.size(); ++i)
        out << ' ' << names[i] << " - " << domain.types[types[i]];
}

void print_schema_atom(ostream &out, const DomainDescription &domain,
                       const ActionSchema &schema, const SchemaAtom &atom) {
    out << '(' << domain.predicates[atom.predicate].name;
    for (const Term &t : atom.args) {
        if (t.kind == Term::VARIABLE)
            out << ' ' << schema.parameters[t.index].name;
        else
            out << ' ' << domain.constant_names[t.index];
    }
    out << ')';
}

}  // namespace

string to_pddl(const DomainDescription &domain) {
    ostringstream out;
    out << "(define (domain " << domain.name << ")\n";
    out << "  (:requirements :strips :typing)\n";
    if (domain.types.size() > 1) {
        out << "  (:types";
        for (size_t t = 1; t < domain.types.size(); ++t)
            out << ' ' << domain.types[t] << " - "
                << domain.types[domain.type_parents[t]];
        out << ")\n";
    }
    if (!domain.constant_names.empty()) {
        out << "  (:constants";
        print_typed_names(out, domain, domain.constant_names, domain.constant_types);
        out << ")\n";
    }
    out << "  (:predicates";
    for (const PredicateSchema &p : domain.predicates) {
        out << " (" << p.name;
        for (size_t i = 0; i < p.parameter_types.size(); ++i)
            out << " ?x" << i << " - " << domain.types[p.parameter_types[i]];
        out << ')';
    }
    out << ")\n";
    for (const ActionSchema &a : domain.actions) {
        out << "  (:action " << a.name << "\n    :parameters (";
        for (size_t i = 0; i < a.parameters.size(); ++i)
            out << (i ? " " : "") << a.parameters[i].name << " - "
                << domain.types[a.parameters[i].type];
        out << ")\n    :precondition (and";
        for (const SchemaAtom &atom : a.preconditions) {
            out << ' ';
            print_schema_atom(out, domain, a, atom);
        }
        out << ")\n    :effect (and";
        for (const SchemaAtom &atom : a.add_effects) {
            out << ' ';
            print_schema_atom(out, domain, a, atom);
        }
        for (const SchemaAtom &atom : a.delete_effects) {
            out << " (not ";
            print_schema_atom(out, domain, a, atom);
            out << ')';
        }
        out << "))\n";
    }
    out << ")\n";
    return out.str();
}

string to_pddl(const LiftedTask &task) {
    const DomainDescription &domain = *task.domain;
    ostringstream out;
    out << "(define (problem " << task.name << ")\n";
    out << "  (:domain " << domain.name << ")\n";
    size_t n_constants = domain.constant_names.size();
    if (task.objects.size() > n_constants) {
        out << "  (:objects";
        for (size_t i = n_constants; i < task.objects.size(); ++i)
            out << ' ' << task.objects[i].name << " - "
                << domain.types[task.objects[i].type];
        out << ")\n";
    }
    out << "  (:init";
    for (const GroundAtom &a : task.init.atoms())
        out << ' ' << to_string(task, a);
    out << ")\n";
    out << "  (:goal (and";
    for (const GroundAtom &a : task.goal.atoms())
        out << ' ' << to_string(task, a);
    out << "))\n";
    out << ")\n";
    return out.str();
}

}  // namespace wlh
