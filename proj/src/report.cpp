#include "regbound/report.hpp"

#include <cmath>
#include <sstream>

namespace regbound {

namespace {

template <class T>
nlohmann::json optional_json(const std::optional<T>& x) {
    return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

nlohmann::json condition_json(const ConditionCheck& c) {
    return {{"holds", c.holds}, {"worst", round_for_report(c.worst)}, {"index", optional_json(c.worst_index)}};
}

std::string format_number(double x) {
    std::ostringstream os;
    os.precision(10);
    os << round_for_report(x);
    return os.str();
}

}  // namespace

double round_for_report(double x) {
    if (!std::isfinite(x)) return x;
    const double r = std::round(x * 1e10) / 1e10;
    return r == 0.0 ? 0.0 : r;
}

nlohmann::json spectrum_json(const Spectrum& s) {
    auto out = nlohmann::json::array();
    for (const auto& e : s.entries) out.push_back({round_for_report(e.value), e.multiplicity});
    return out;
}

nlohmann::json intersection_array_json(const IntersectionArray& a) {
    return {{"b", a.b}, {"c", a.c}};
}

nlohmann::json conditions_json(const CertificateConditions& c) {
    return {
        {"f_at_k_positive", condition_json(c.f_at_k_positive)},
        {"f_at_taus_nonpositive", condition_json(c.f_at_taus_nonpositive)},
        {"f0_positive", condition_json(c.f0_positive)},
        {"coeffs_nonnegative", condition_json(c.coeffs_nonnegative)},
    };
}

nlohmann::json certificate_json(const CertificateSummary& c) {
    auto coeffs = nlohmann::json::array();
    for (double x : c.f_coeffs) coeffs.push_back(round_for_report(x));
    nlohmann::json out{
        {"valid", c.valid},
        {"exact", c.exact},
        {"bound", c.bound ? nlohmann::json(round_for_report(*c.bound)) : nlohmann::json(nullptr)},
        {"f_coeffs", coeffs},
        {"f_at_k", round_for_report(c.f_at_k)},
        {"f0", round_for_report(c.f0)},
        {"conditions", conditions_json(c.conditions)},
    };
    if (!c.bound_text.empty()) out["bound_exact"] = c.bound_text;
    return out;
}

nlohmann::json report_json(const CertificationReport& r) {
    nlohmann::json lp = nullptr;
    if (r.lp) {
        lp = certificate_json(*r.lp);
        lp["tight"] = r.tight;
    }
    return {
        {"schema", kReportSchemaVersion},
        {"v", r.v},
        {"k", optional_json(r.k)},
        {"girth", optional_json(r.girth)},
        {"diameter", optional_json(r.diameter)},
        {"d", optional_json(r.d)},
        {"spectrum", r.spectrum ? spectrum_json(*r.spectrum) : nlohmann::json(nullptr)},
        {"moore_bound", optional_json(r.moore_bound)},
        {"tutte_bound", optional_json(r.tutte_bound)},
        {"is_moore", r.is_moore},
        {"moore_polygon_c", optional_json(r.moore_polygon_c)},
        {"distance_regular",
         r.distance_regular ? intersection_array_json(*r.distance_regular) : nlohmann::json(nullptr)},
        {"lp", lp},
        {"verdict", to_string(r.verdict)},
        {"reason", r.reason},
        {"discrepancies", r.discrepancies},
    };
}

std::string spectrum_text(const Spectrum& s) {
    std::string out;
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i) out += ", ";
        out += format_number(s.entries[i].value) + "^" + std::to_string(s.entries[i].multiplicity);
    }
    return out;
}

std::string report_text(const CertificationReport& r) {
    std::ostringstream os;
    auto opt = [](const auto& x) { return x ? std::to_string(*x) : std::string("-"); };
    os << "verdict:          " << to_string(r.verdict) << " (" << r.reason << ")\n";
    os << "v, k:             " << r.v << ", " << opt(r.k) << "\n";
    os << "girth, diameter:  " << opt(r.girth) << ", " << opt(r.diameter) << "\n";
    os << "d:                " << opt(r.d) << "\n";
    if (r.spectrum) os << "spectrum:         " << spectrum_text(*r.spectrum) << "\n";
    os << "moore bound:      " << opt(r.moore_bound) << (r.is_moore ? " (attained)" : "") << "\n";
    if (r.tutte_bound) os << "tutte bound:      " << *r.tutte_bound << "\n";
    if (r.distance_regular) {
        os << "intersection:     b = {";
        for (std::size_t i = 0; i < r.distance_regular->b.size(); ++i)
            os << (i ? "," : "") << r.distance_regular->b[i];
        os << "}, c = {";
        for (std::size_t i = 0; i < r.distance_regular->c.size(); ++i)
            os << (i ? "," : "") << r.distance_regular->c[i];
        os << "}\n";
    } else {
        os << "intersection:     not distance-regular\n";
    }
    if (r.moore_polygon_c) os << "moore polygon c:  " << *r.moore_polygon_c << "\n";
    if (r.lp) {
        os << "lp bound:         "
           << (r.lp->bound ? (r.lp->bound_text.empty() ? format_number(*r.lp->bound) : r.lp->bound_text)
                           : std::string("invalid certificate"))
           << (r.tight ? " (tight)" : "") << "\n";
        os << "f coefficients:   ";
        for (std::size_t i = 0; i < r.lp->f_coeffs.size(); ++i) os << (i ? " " : "") << format_number(r.lp->f_coeffs[i]);
        os << "\n";
    }
    for (const auto& d : r.discrepancies) os << "discrepancy:      " << d << "\n";
    return os.str();
}

}  // namespace regbound
