#ifndef WLH_PDDL_HPP
#define WLH_PDDL_HPP

#include "wlh/task.hpp"

#include <memory>
#include <string>

namespace wlh {

// Parses a PDDL domain restricted to :strips and :typing. Any other
// requirement or construct raises UnsupportedRequirementError; plain
// syntax problems raise ParseError with file/line/column.
std::shared_ptr<const DomainDescription> parse_domain(
    const std::string &text, const std::string &filename = "<domain>");

LiftedTask parse_problem(const std::string &text,
                         std::shared_ptr<const DomainDescription> domain,
                         const std::string &filename = "<problem>");

std::shared_ptr<const DomainDescription> parse_domain_file(const std::string &path);
LiftedTask parse_problem_file(const std::string &path,
                              std::shared_ptr<const DomainDescription> domain);

// Canonical printers; parse(print(x)) is structurally equal to x.
std::string to_pddl(const DomainDescription &domain);
std::string to_pddl(const LiftedTask &task);

}  // namespace wlh

#endif
