#include "ucddp/mip_export.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ucddp/dominance.hpp"

namespace ucddp {

FormulationVariant variant_from_string(const std::string& label) {
    if (label == "f2")
        return FormulationVariant::f2;
    if (label == "fi")
        return FormulationVariant::fi;
    if (label == "fs")
        return FormulationVariant::fs;
    if (label == "fis")
        return FormulationVariant::fis;
    throw std::invalid_argument("unknown formulation variant: " + label);
}

std::string variant_to_string(FormulationVariant variant) {
    switch (variant) {
    case FormulationVariant::f2: return "f2";
    case FormulationVariant::fi: return "fi";
    case FormulationVariant::fs: return "fs";
    case FormulationVariant::fis: return "fis";
    }
    throw std::logic_error("invalid variant");
}

namespace {

int x_var(int i, int j, int n) {
    return n + static_cast<int>(Encoding::pair_index(i, j, n));
}

void push_coeff(std::vector<std::pair<int, std::int64_t>>& coeffs, int var,
                std::int64_t value_times2) {
    if (value_times2 != 0)
        coeffs.emplace_back(var, value_times2);
}

std::vector<std::pair<int, std::int64_t>> collect_delta_terms(const LinearForm& form,
                                                              int skip_u, int skip_v,
                                                              std::int64_t extra_u,
                                                              std::int64_t extra_v) {
    // Doubled coefficients of the form, with extra twice-terms merged onto
    // the d_u / d_v entries, in ascending variable order.
    std::vector<std::pair<int, std::int64_t>> out;
    for (int i = 0; i < static_cast<int>(form.coeff.size()); ++i) {
        std::int64_t c2 = 2 * form.coeff[static_cast<std::size_t>(i)];
        if (i == skip_u)
            c2 += extra_u;
        if (i == skip_v)
            c2 += extra_v;
        push_coeff(out, i, c2);
    }
    return out;
}

} // namespace

MipModel build_model(const Instance& inst, FormulationVariant variant) {
    const int n = inst.n();
    MipModel model;
    model.n = n;
    model.variant = variant;

    for (int j = 0; j < n; ++j)
        model.var_names.push_back("d_" + std::to_string(j + 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            model.var_names.push_back("x_" + std::to_string(i + 1) + "_" +
                                      std::to_string(j + 1));

    // Objective: expansion of the encoded-partition penalty.
    const RatioOrders orders = ratio_orders(inst);
    std::vector<std::int64_t> obj2(model.var_names.size(), 0);
    std::int64_t const2 = 0;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < orders.rho_inv[static_cast<std::size_t>(j)]; ++k) {
            const int i = orders.rho[static_cast<std::size_t>(k)];
            const std::int64_t c = inst.alpha(j) * inst.p(i);
            obj2[static_cast<std::size_t>(j)] += c;
            obj2[static_cast<std::size_t>(i)] += c;
            obj2[static_cast<std::size_t>(x_var(std::min(i, j), std::max(i, j), n))] -= c;
        }
        for (int k = 0; k < orders.sigma_inv[static_cast<std::size_t>(j)]; ++k) {
            const int i = orders.sigma[static_cast<std::size_t>(k)];
            const std::int64_t c = inst.beta(j) * inst.p(i);
            const2 += 2 * c;
            obj2[static_cast<std::size_t>(j)] -= c;
            obj2[static_cast<std::size_t>(i)] -= c;
            obj2[static_cast<std::size_t>(x_var(std::min(i, j), std::max(i, j), n))] -= c;
        }
        const2 += 2 * inst.beta(j) * inst.p(j);
        obj2[static_cast<std::size_t>(j)] -= 2 * inst.beta(j) * inst.p(j);
    }
    for (int var = 0; var < model.var_count(); ++var)
        if (obj2[static_cast<std::size_t>(var)] != 0)
            model.objective.emplace_back(var, obj2[static_cast<std::size_t>(var)]);
    model.objective_constant_times2 = const2;

    // Pair consistency inequalities, four per unordered pair.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int x = x_var(i, j, n);
            const std::string suffix =
                "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            LinearInequality q;
            q.u = i;
            q.v = j;

            q.name = "fortet1" + suffix;
            q.tag = IneqTag::fortet1;
            q.coeffs = {{x, 2}, {i, -2}, {j, 2}};
            q.sense = Sense::ge;
            q.rhs_times2 = 0;
            model.inequalities.push_back(q);

            q.name = "fortet2" + suffix;
            q.tag = IneqTag::fortet2;
            q.coeffs = {{x, 2}, {i, 2}, {j, -2}};
            model.inequalities.push_back(q);

            q.name = "fortet3" + suffix;
            q.tag = IneqTag::fortet3;
            q.coeffs = {{x, 2}, {i, -2}, {j, -2}};
            q.sense = Sense::le;
            q.rhs_times2 = 0;
            model.inequalities.push_back(q);

            q.name = "fortet4" + suffix;
            q.tag = IneqTag::fortet4;
            q.coeffs = {{x, 2}, {i, 2}, {j, 2}};
            q.sense = Sense::le;
            q.rhs_times2 = 4;
            model.inequalities.push_back(q);
        }

    const bool with_insert =
        variant == FormulationVariant::fi || variant == FormulationVariant::fis;
    const bool with_swap =
        variant == FormulationVariant::fs || variant == FormulationVariant::fis;

    if (with_insert || with_swap) {
        DominanceContext ctx(inst);
        if (with_insert) {
            for (int u = 0; u < n; ++u) {
                const LinearForm& form = ctx.insert_form(u);
                const BigMInsert m = ctx.big_m_insert(u);

                // Delta_u(d) >= -M_u (1 - d_u)
                LinearInequality q;
                q.name = "insert_early_" + std::to_string(u + 1);
                q.tag = IneqTag::insert_early;
                q.u = u;
                q.coeffs = collect_delta_terms(form, u, -1, -2 * m.m, 0);
                q.sense = Sense::ge;
                q.rhs_times2 = -2 * m.m - 2 * form.constant;
                model.inequalities.push_back(std::move(q));

                // -Delta_u(d) >= -M'_u d_u
                LinearInequality r;
                r.name = "insert_tardy_" + std::to_string(u + 1);
                r.tag = IneqTag::insert_tardy;
                r.u = u;
                for (int i = 0; i < n; ++i) {
                    std::int64_t c2 = -2 * form.coeff[static_cast<std::size_t>(i)];
                    if (i == u)
                        c2 += 2 * m.m_prime;
                    push_coeff(r.coeffs, i, c2);
                }
                r.sense = Sense::ge;
                r.rhs_times2 = 2 * form.constant;
                model.inequalities.push_back(std::move(r));
            }
        }
        if (with_swap) {
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u == v)
                        continue;
                    const LinearForm form = ctx.swap_form(u, v);
                    const BigMSwap m = ctx.big_m_swap(u, v);

                    // Delta_{u,v}(d) >= -M_{u,v} (d_v + 1 - d_u)
                    LinearInequality q;
                    q.name = "swap_" + std::to_string(u + 1) + "_" + std::to_string(v + 1);
                    q.tag = IneqTag::swap;
                    q.u = u;
                    q.v = v;
                    q.coeffs = collect_delta_terms(form, u, v, -m.m_times2, m.m_times2);
                    q.sense = Sense::ge;
                    q.rhs_times2 = -m.m_times2 - 2 * form.constant;
                    model.inequalities.push_back(std::move(q));
                }
        }
    }
    return model;
}

namespace {

// Doubled values print as exact decimals: 4 -> "2", 3 -> "1.5".
std::string format_times2(std::int64_t value_times2) {
    std::string out;
    if (value_times2 < 0) {
        out += "-";
        value_times2 = -value_times2;
    }
    out += std::to_string(value_times2 / 2);
    if (value_times2 % 2 != 0)
        out += ".5";
    return out;
}

void append_terms(std::ostringstream& os, const MipModel& model,
                  const std::vector<std::pair<int, std::int64_t>>& coeffs) {
    if (coeffs.empty()) {
        // Identical-twin tasks can make a swap variation vanish entirely;
        // keep the line solver-readable with an explicit zero term.
        os << "0 " << model.var_names.front();
        return;
    }
    bool first = true;
    for (const auto& [var, c2] : coeffs) {
        if (first) {
            if (c2 < 0)
                os << "- ";
            first = false;
        } else {
            os << (c2 < 0 ? " - " : " + ");
        }
        const std::int64_t mag = c2 < 0 ? -c2 : c2;
        if (mag != 2)
            os << format_times2(mag) << " ";
        os << model.var_names[static_cast<std::size_t>(var)];
    }
}

const char* sense_text(Sense sense) {
    switch (sense) {
    case Sense::ge: return ">=";
    case Sense::le: return "<=";
    case Sense::eq: return "=";
    }
    throw std::logic_error("invalid sense");
}

} // namespace

std::string emit_lp(const MipModel& model) {
    std::ostringstream os;
    os << "\\ variant " << variant_to_string(model.variant) << "\n";
    os << "Minimize\n obj: ";
    append_terms(os, model, model.objective);
    if (model.objective_constant_times2 != 0) {
        os << (model.objective_constant_times2 < 0 ? " - " : " + ");
        const std::int64_t mag = model.objective_constant_times2 < 0
                                     ? -model.objective_constant_times2
                                     : model.objective_constant_times2;
        os << format_times2(mag);
    }
    os << "\n";
    os << "Subject To\n";
    for (const LinearInequality& q : model.inequalities) {
        os << " " << q.name << ": ";
        append_terms(os, model, q.coeffs);
        os << " " << sense_text(q.sense) << " " << format_times2(q.rhs_times2) << "\n";
    }
    os << "Bounds\n";
    for (int var = model.n; var < model.var_count(); ++var)
        os << " 0 <= " << model.var_names[static_cast<std::size_t>(var)] << " <= 1\n";
    os << "Binaries\n";
    for (int var = 0; var < model.n; ++var)
        os << " " << model.var_names[static_cast<std::size_t>(var)];
    os << "\nEnd\n";
    return os.str();
}

namespace {

class LpReader {
public:
    explicit LpReader(const std::string& text) : in_(text) {}

    MipModel read() {
        MipModel model;
        std::string line;

        require_line(line, "variant comment");
        if (line.rfind("\\ variant ", 0) != 0)
            throw std::runtime_error("missing variant comment");
        model.variant = variant_from_string(line.substr(10));

        require_line(line, "Minimize");
        if (line != "Minimize")
            throw std::runtime_error("expected Minimize");
        require_line(line, "objective");
        parse_objective(line, model);

        require_line(line, "Subject To");
        if (line != "Subject To")
            throw std::runtime_error("expected Subject To");
        while (require_line(line, "constraint or Bounds"), line != "Bounds")
            parse_constraint(line, model);

        while (require_line(line, "bound or Binaries"), line != "Binaries") {
            // bound lines carry no information beyond the x variable list
            std::istringstream ss(line);
            std::string lo, le1, name, le2, hi;
            if (!(ss >> lo >> le1 >> name >> le2 >> hi) || lo != "0" || le1 != "<=" ||
                le2 != "<=" || hi != "1")
                throw std::runtime_error("malformed bound line: " + line);
            bound_names_.push_back(name);
        }

        require_line(line, "binary variable list");
        {
            std::istringstream ss(line);
            std::string name;
            while (ss >> name)
                binary_names_.push_back(name);
        }
        require_line(line, "End");
        if (line != "End")
            throw std::runtime_error("expected End");

        finalize_variables(model);
        return model;
    }

private:
    bool require_line(std::string& line, const char* what) {
        if (!std::getline(in_, line))
            throw std::runtime_error(std::string("unexpected end of LP text, wanted ") + what);
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        // emitted lines are single-space indented
        if (!line.empty() && line.front() == ' ')
            line.erase(0, 1);
        return true;
    }

    int var_id(const std::string& name) {
        auto it = var_ids_.find(name);
        if (it != var_ids_.end())
            return it->second;
        const int id = static_cast<int>(seen_names_.size());
        var_ids_.emplace(name, id);
        seen_names_.push_back(name);
        return id;
    }

    static std::int64_t parse_times2(const std::string& token) {
        std::string body = token;
        bool negative = false;
        if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
            negative = body[0] == '-';
            body.erase(0, 1);
        }
        std::int64_t whole = 0;
        std::int64_t frac = 0;
        const auto dot = body.find('.');
        if (dot != std::string::npos) {
            if (body.substr(dot + 1) != "5")
                throw std::runtime_error("unsupported decimal: " + token);
            frac = 1;
            body = body.substr(0, dot);
        }
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
            throw std::runtime_error("malformed number: " + token);
        whole = std::stoll(body);
        const std::int64_t v2 = 2 * whole + frac;
        return negative ? -v2 : v2;
    }

    // Parses "c var + c var - c ..." where a bare var means coefficient 1
    // and a bare number is a constant term. Returns the constant (doubled).
    std::int64_t parse_terms(std::istringstream& ss,
                             std::vector<std::pair<int, std::int64_t>>& coeffs,
                             std::string& pending) {
        std::int64_t constant2 = 0;
        std::int64_t sign = 1;
        std::string tok;
        auto is_number = [](const std::string& t) {
            return !t.empty() && (std::isdigit(static_cast<unsigned char>(t[0])) != 0);
        };
        while (ss >> tok) {
            if (tok == "+") {
                sign = 1;
                continue;
            }
            if (tok == "-") {
                sign = -1;
                continue;
            }
            if (tok == ">=" || tok == "<=" || tok == "=") {
                pending = tok;
                return constant2;
            }
            if (is_number(tok)) {
                const std::int64_t v2 = sign * parse_times2(tok);
                std::string next;
                if (ss >> next) {
                    if (next == "+" || next == "-" || next == ">=" || next == "<=" ||
                        next == "=") {
                        constant2 += v2;
                        if (next == "+" || next == "-") {
                            sign = next == "-" ? -1 : 1;
                            continue;
                        }
                        pending = next;
                        return constant2;
                    }
                    if (v2 != 0)
                        coeffs.emplace_back(var_id(next), v2);
                    sign = 1;
                    continue;
                }
                constant2 += v2;
                return constant2;
            }
            coeffs.emplace_back(var_id(tok), sign * 2);
            sign = 1;
        }
        return constant2;
    }

    void parse_objective(const std::string& line, MipModel& model) {
        std::istringstream ss(line);
        std::string head;
        ss >> head;
        if (head != "obj:")
            throw std::runtime_error("expected obj: in objective line");
        std::string pending;
        model.objective_constant_times2 = parse_terms(ss, model.objective, pending);
        if (!pending.empty())
            throw std::runtime_error("unexpected relation in objective");
    }

    static IneqTag tag_from_name(const std::string& name, int& u, int& v) {
        auto parse_ids = [&](const std::string& rest, bool pair) {
            std::istringstream ss(rest);
            std::string part;
            std::vector<int> ids;
            while (std::getline(ss, part, '_'))
                ids.push_back(std::stoi(part) - 1);
            if (ids.empty() || (pair && ids.size() != 2) || (!pair && ids.size() != 1))
                throw std::runtime_error("malformed constraint name: " + name);
            u = ids[0];
            v = pair ? ids[1] : -1;
        };
        if (name.rfind("fortet", 0) == 0) {
            parse_ids(name.substr(8), true);
            switch (name[6]) {
            case '1': return IneqTag::fortet1;
            case '2': return IneqTag::fortet2;
            case '3': return IneqTag::fortet3;
            case '4': return IneqTag::fortet4;
            default: throw std::runtime_error("malformed constraint name: " + name);
            }
        }
        if (name.rfind("insert_early_", 0) == 0) {
            parse_ids(name.substr(13), false);
            return IneqTag::insert_early;
        }
        if (name.rfind("insert_tardy_", 0) == 0) {
            parse_ids(name.substr(13), false);
            return IneqTag::insert_tardy;
        }
        if (name.rfind("swap_", 0) == 0) {
            parse_ids(name.substr(5), true);
            return IneqTag::swap;
        }
        throw std::runtime_error("unknown constraint name: " + name);
    }

    void parse_constraint(const std::string& line, MipModel& model) {
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("constraint line without name: " + line);
        LinearInequality q;
        q.name = line.substr(0, colon);
        q.tag = tag_from_name(q.name, q.u, q.v);
        std::istringstream ss(line.substr(colon + 1));
        std::string pending;
        const std::int64_t lhs_const2 = parse_terms(ss, q.coeffs, pending);
        if (pending.empty())
            throw std::runtime_error("constraint without relation: " + line);
        if (lhs_const2 != 0)
            throw std::runtime_error("unexpected constant on constraint lhs: " + line);
        q.sense = pending == ">=" ? Sense::ge : pending == "<=" ? Sense::le : Sense::eq;
        std::string rhs;
        if (!(ss >> rhs))
            throw std::runtime_error("constraint without rhs: " + line);
        q.rhs_times2 = parse_times2(rhs);
        std::string extra;
        if (ss >> extra)
            throw std::runtime_error("trailing tokens on constraint: " + line);
        model.inequalities.push_back(std::move(q));
    }

    void finalize_variables(MipModel& model) {
        model.n = static_cast<int>(binary_names_.size());
        model.var_names = binary_names_;
        model.var_names.insert(model.var_names.end(), bound_names_.begin(),
                               bound_names_.end());
        // Remap term variable ids (assigned in reading order) onto the
        // d-then-x ordering.
        std::map<std::string, int> final_ids;
        for (int i = 0; i < static_cast<int>(model.var_names.size()); ++i)
            final_ids.emplace(model.var_names[static_cast<std::size_t>(i)], i);
        auto remap = [&](std::vector<std::pair<int, std::int64_t>>& coeffs) {
            for (auto& [var, c2] : coeffs) {
                const std::string& name = seen_names_[static_cast<std::size_t>(var)];
                auto it = final_ids.find(name);
                if (it == final_ids.end())
                    throw std::runtime_error("undeclared variable: " + name);
                var = it->second;
            }
        };
        remap(model.objective);
        for (LinearInequality& q : model.inequalities)
            remap(q.coeffs);
    }

    std::istringstream in_;
    std::map<std::string, int> var_ids_;
    std::vector<std::string> seen_names_;
    std::vector<std::string> bound_names_;
    std::vector<std::string> binary_names_;
};

} // namespace

MipModel parse_lp(const std::string& text) {
    return LpReader(text).read();
}

std::int64_t point_value(const MipModel& model, const Encoding& point, int var) {
    if (var < model.n)
        return point.delta[static_cast<std::size_t>(var)];
    return point.x[static_cast<std::size_t>(var - model.n)];
}

std::int64_t objective_value(const MipModel& model, const Encoding& point) {
    std::int64_t total2 = model.objective_constant_times2;
    for (const auto& [var, c2] : model.objective)
        total2 += c2 * point_value(model, point, var);
    if (total2 % 2 != 0)
        throw std::logic_error("objective value is not integral at a binary point");
    return total2 / 2;
}

bool inequality_satisfied(const LinearInequality& ineq, const MipModel& model,
                          const Encoding& point) {
    std::int64_t lhs2 = 0;
    for (const auto& [var, c2] : ineq.coeffs)
        lhs2 += c2 * point_value(model, point, var);
    switch (ineq.sense) {
    case Sense::ge: return lhs2 >= ineq.rhs_times2;
    case Sense::le: return lhs2 <= ineq.rhs_times2;
    case Sense::eq: return lhs2 == ineq.rhs_times2;
    }
    throw std::logic_error("invalid sense");
}

bool point_feasible(const MipModel& model, const Encoding& point) {
    for (const LinearInequality& q : model.inequalities)
        if (!inequality_satisfied(q, model, point))
            return false;
    return true;
}

} // namespace ucddp
