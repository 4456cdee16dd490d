#include "cohinv/harness/invariants_report.hpp"

#include "cohinv/decide.hpp"
#include "cohinv/error.hpp"

#include <sstream>

namespace cohinv::harness {

using nlohmann::json;

json class_to_json(const GradedClass& c)
{
    json symbols = json::array();
    for (const auto& [d, syms] : c.components()) {
        for (const auto& s : syms) {
            json entries = json::array();
            for (const auto& e : s.entries())
                entries.push_back(to_string(e));
            symbols.push_back(std::move(entries));
        }
    }
    return {{"render", render(c)}, {"symbols", std::move(symbols)}};
}

GradedClass class_from_json(const json& j)
{
    if (!j.contains("symbols") || !j["symbols"].is_array())
        throw Error(ErrorKind::InvalidArgument, "class JSON lacks a 'symbols' array");
    std::vector<Symbol> symbols;
    for (const auto& s : j["symbols"]) {
        std::vector<SquareClass> entries;
        for (const auto& e : s)
            entries.push_back(square_class(parse_rational(e.get<std::string>())));
        symbols.emplace_back(std::move(entries));
    }
    return GradedClass::from_symbols(std::move(symbols));
}

json invariants_to_json(const BinaryForm& f, const CurveInvariants& inv)
{
    json out;
    out["schema"] = kInvariantsSchema;
    json coeffs = json::array();
    for (const auto& c : f.coeffs())
        coeffs.push_back(to_string(c));
    out["coeffs"] = coeffs;
    out["genus"] = inv.genus;
    json alpha = json::array();
    for (std::size_t i = 0; i < inv.alpha.size(); ++i) {
        json a = class_to_json(inv.alpha[i]);
        a["degree"] = i;
        alpha.push_back(std::move(a));
    }
    out["alpha"] = alpha;
    out["tau"] = inv.tau ? class_to_json(*inv.tau) : json{{"error", *inv.tau_error}};
    if (inv.beta) {
        out["beta"] = class_to_json(*inv.beta);
        out["beta"]["point"] = to_string(*inv.beta_point);
    } else {
        out["beta"] = json{{"error", *inv.beta_error}};
    }
    return out;
}

namespace {

std::string indent(const std::string& block)
{
    std::string out = "  ";
    for (char c : block) {
        out += c;
        if (c == '\n')
            out += "  ";
    }
    return out;
}

}  // namespace

std::string invariants_to_text(const BinaryForm& f, const CurveInvariants& inv)
{
    std::ostringstream out;
    out << "curve: " << to_string(f) << " (genus " << inv.genus << ")\n";
    for (std::size_t i = 0; i < inv.alpha.size(); ++i)
        out << "alpha_" << i << ":\n" << indent(render(inv.alpha[i])) << "\n";
    out << "tau:\n" << indent(inv.tau ? render(*inv.tau) : *inv.tau_error) << "\n";
    out << "beta_" << inv.genus + 2;
    if (inv.beta_point && inv.beta)
        out << " (at " << to_string(*inv.beta_point) << ")";
    out << ":\n" << indent(inv.beta ? render(*inv.beta) : *inv.beta_error) << "\n";
    return out.str();
}

BinaryForm parse_coeff_list(const std::string& text)
{
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        coeffs.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return BinaryForm(std::move(coeffs));
}

ProjectivePoint parse_point(const std::string& text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorKind::InvalidArgument, "point must be written p0:p1");
    return {parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1))};
}

}  // namespace cohinv::harness
