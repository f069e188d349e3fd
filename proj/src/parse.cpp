#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "cbn/model.hpp"

namespace cbn {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool is_constant_literal(std::string_view tok) {
    return tok == "0" || tok == "1" || tok == "true" || tok == "false" || tok == "TRUE" ||
           tok == "FALSE";
}

struct Definition {
    std::size_t line = 0;
    bool controlled = false;
    std::vector<VarIndex> deps;
    std::vector<std::size_t> dep_lines;
};

// Shared line grammar for conjunctive ('&') and disjunctive ('|') networks.
Cbcn parse_network(std::string_view text, char op, char foreign_op) {
    std::map<VarIndex, Definition> defs;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(ParseErrorKind::Syntax, line_no, "expected 'X<i> = ...'");
        }
        const auto lhs = trim(line.substr(0, eq));
        const auto rhs = trim(line.substr(eq + 1));

        VarIndex target = 0;
        if (!parse_var_name(lhs, target)) {
            throw ParseError(ParseErrorKind::Syntax, line_no,
                             "left-hand side '" + std::string(lhs) + "' is not a variable X<i>");
        }
        if (target == static_cast<VarIndex>(-1)) {
            throw ParseError(ParseErrorKind::IndexOutOfRange, line_no, "variables are numbered from X1");
        }
        if (defs.count(target)) {
            throw ParseError(ParseErrorKind::DuplicateDefinition, line_no,
                             var_name(target) + " already defined on line " +
                                 std::to_string(defs[target].line));
        }

        Definition def;
        def.line = line_no;
        if (rhs == "?") {
            def.controlled = true;
            defs.emplace(target, std::move(def));
            continue;
        }
        if (rhs.empty() || is_constant_literal(rhs)) {
            throw ParseError(ParseErrorKind::ConstantUpdate, line_no,
                             var_name(target) +
                                 " has a constant update function; replace it by a control ('?')");
        }
        if (rhs.find(foreign_op) != std::string_view::npos) {
            throw ParseError(ParseErrorKind::MixedOperators, line_no,
                             std::string("operator '") + foreign_op + "' not allowed; only '" + op +
                                 "' may combine variables here");
        }

        std::size_t tpos = 0;
        while (tpos <= rhs.size()) {
            const auto sep = rhs.find(op, tpos);
            const auto tok = trim(
                rhs.substr(tpos, sep == std::string_view::npos ? std::string_view::npos : sep - tpos));
            tpos = sep == std::string_view::npos ? rhs.size() + 1 : sep + 1;
            if (is_constant_literal(tok)) {
                throw ParseError(ParseErrorKind::ConstantUpdate, line_no,
                                 "literal constant '" + std::string(tok) + "' in update of " +
                                     var_name(target));
            }
            VarIndex dep = 0;
            if (!parse_var_name(tok, dep)) {
                throw ParseError(ParseErrorKind::Syntax, line_no,
                                 "expected a variable X<j>, found '" + std::string(tok) + "'");
            }
            if (dep == static_cast<VarIndex>(-1)) {
                throw ParseError(ParseErrorKind::IndexOutOfRange, line_no,
                                 "variables are numbered from X1");
            }
            def.deps.push_back(dep);
            def.dep_lines.push_back(line_no);
        }
        defs.emplace(target, std::move(def));
    }

    if (defs.empty()) throw ParseError(ParseErrorKind::Empty, 0, "network has no variables");

    const std::size_t n = std::size_t{defs.rbegin()->first} + 1;
    for (VarIndex i = 0; i < n; ++i) {
        if (!defs.count(i)) {
            throw ParseError(ParseErrorKind::MissingDefinition, 0,
                             var_name(i) + " has no update definition");
        }
    }

    std::vector<std::vector<VarIndex>> sets(n);
    std::vector<VarIndex> controlled;
    for (auto& [idx, def] : defs) {
        for (std::size_t k = 0; k < def.deps.size(); ++k) {
            if (def.deps[k] >= n) {
                throw ParseError(ParseErrorKind::IndexOutOfRange, def.dep_lines[k],
                                 var_name(def.deps[k]) + " is referenced but only " +
                                     std::to_string(n) + " variables are defined");
            }
        }
        if (def.controlled) {
            controlled.push_back(idx);
            // The base update of a controlled variable is unknown; the identity
            // placeholder is never evaluated and never becomes a graph arc.
            sets[idx] = {idx};
        } else {
            sets[idx] = std::move(def.deps);
        }
    }
    return Cbcn(Cbn(std::move(sets)), std::move(controlled));
}

} // namespace

Cbcn parse_cbn(std::string_view text) { return parse_network(text, '&', '|'); }

Cbcn dbn_to_cbn(std::string_view text) { return parse_network(text, '|', '&'); }

} // namespace cbn
