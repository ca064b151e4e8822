#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fgx/chern.hpp"
#include "fgx/exponent.hpp"
#include "fgx/fgl.hpp"
#include "fgx/invariants.hpp"

using namespace fgx;

namespace {

RingPtr parse_ring(const std::string& s) {
    if (s == "Z") return Ring::integers();
    if (s == "Q") return Ring::rationals();
    if (s.rfind("Z/", 0) == 0) {
        mpz_class m(s.substr(2));
        return Ring::integers_mod(m);
    }
    if (s.rfind("Z[", 0) == 0 && s.back() == ']') {
        std::vector<mpz_class> primes;
        std::stringstream body(s.substr(2, s.size() - 3));
        std::string item;
        while (std::getline(body, item, ',')) {
            if (item.rfind("1/", 0) != 0) throw StructuralError("ring: expected Z[1/p,...]");
            primes.emplace_back(item.substr(2));
        }
        if (primes.empty()) throw StructuralError("ring: expected Z[1/p,...]");
        return Ring::integers_localized(primes);
    }
    throw StructuralError("cannot parse ring: " + s);
}

FormalGroupLaw make_law(const std::string& name, int trunc, const std::vector<long long>& a) {
    RingPtr Z = Ring::integers();
    if (name == "additive") return FormalGroupLaw::additive(Z, trunc);
    if (name == "multiplicative") return FormalGroupLaw::multiplicative(Z, trunc);
    if (name == "lorentz") return FormalGroupLaw::lorentz(Z, trunc);
    if (name == "elliptic") {
        if (a.size() != 5)
            throw StructuralError("elliptic law needs --a a1,a2,a3,a4,a6");
        std::vector<RingElem> cs;
        for (long long v : a) cs.push_back(ring_int(Z, (long)v));
        return FormalGroupLaw::elliptic(cs, trunc);
    }
    if (name == "elliptic-symbolic") return FormalGroupLaw::elliptic_symbolic(trunc);
    if (name == "symbolic") return FormalGroupLaw::symbolic(trunc);
    throw StructuralError("unknown law: " + name);
}

std::string divisors_str(const std::vector<mpz_class>& divs) {
    if (divs.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < divs.size(); ++i) {
        if (i) s += ",";
        s += divs[i].get_str();
    }
    return s;
}

int run_fgl(const std::string& law_name, int trunc, const std::vector<long long>& a,
            const std::string& format) {
    FormalGroupLaw law = make_law(law_name, trunc, a);
    AxiomReport rep = law.verify_axioms();
    std::string inv = law.formal_inverse().to_string({"u"});
    std::string log = law.logarithm().to_string({"u"});

    if (format == "json") {
        nlohmann::ordered_json j;
        j["law"] = law.name();
        j["ring"] = law.ring()->name();
        j["trunc"] = law.trunc();
        j["series"] = law.to_string();
        j["inverse"] = inv;
        j["logarithm"] = log;
        j["axioms_ok"] = rep.ok;
        if (!rep.ok) {
            j["axiom_failure"] = {{"axiom", rep.axiom},
                                  {"monomial", rep.monomial},
                                  {"lhs", rep.lhs},
                                  {"rhs", rep.rhs}};
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "law:       " << law.name() << " over " << law.ring()->name()
                  << ", degree <= " << law.trunc() << "\n";
        std::cout << "F(u,v)   = " << law.to_string() << "\n";
        std::cout << "inverse  = " << inv << "\n";
        std::cout << "log      = " << log << "\n";
        if (rep.ok) {
            std::cout << "axioms:    pass\n";
        } else {
            std::cout << "axioms:    FAIL (" << rep.axiom << " at " << rep.monomial
                      << ": " << rep.lhs << " vs " << rep.rhs << ")\n";
        }
    }
    return rep.ok ? 0 : 1;
}

int run_exponent(const std::string& type, const std::string& from, const std::string& to, int d,
                 int trunc, const std::vector<long long>& a_from,
                 const std::vector<long long>& a_to, const std::string& pool_path,
                 const std::string& policy, const std::string& format) {
    RootSystem rs = RootSystem::parse(type);
    FormalGroupLaw F = make_law(from, trunc, a_from);
    FormalGroupLaw G = make_law(to, trunc, a_to);

    GeneratorPool pool = pool_path.empty() ? GeneratorPool::default_for(rs, d)
                                           : GeneratorPool::from_json_file(pool_path, rs);
    if (!policy.empty()) pool.policy = parse_policy(policy);

    ExponentReport r = tau(rs, F, G, d, &pool);
    if (format == "json") {
        std::cout << exponent_to_json(r) << "\n";
    } else {
        std::cout << "type " << r.type << ", d=" << r.d << ", " << r.fgl_from << " -> " << r.fgl_to
                  << ": tau=" << r.tau.get_str() << " (" << tau_certainty_name(r.certainty) << ")"
                  << ", divisors " << divisors_str(r.elementary_divisors) << ", rows "
                  << r.source_rows << "/" << r.target_rows << "\n";
    }
    return 0;
}

int run_flag(const std::string& type, const std::string& law_name, const std::string& ring_s,
             int dmax, int trunc, const std::vector<long long>& a,
             const std::string& pool_path, const std::string& policy, const std::string& format) {
    RootSystem rs = RootSystem::parse(type);
    RingPtr ring = parse_ring(ring_s);
    FormalGroupLaw law = make_law(law_name, trunc, a);

    bool all_match = true;
    std::vector<FlagReport> reports;
    for (int d = 0; d <= dmax; ++d) {
        GeneratorPool pool = pool_path.empty() ? GeneratorPool::default_for(rs, d)
                                               : GeneratorPool::from_json_file(pool_path, rs);
        if (!policy.empty()) pool.policy = parse_policy(policy);
        FlagReport r = flag_diagnostics(rs, law, d, ring, &pool);
        all_match = all_match && r.match;
        reports.push_back(std::move(r));
    }

    if (format == "json") {
        std::cout << "[";
        for (size_t i = 0; i < reports.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << flag_to_json(reports[i]);
        }
        std::cout << "]\n";
    } else {
        std::cout << "type " << rs.name() << ", law " << law.name() << ", ring " << ring->name()
                  << "\n";
        std::cout << "  d  rank  expected  torsion  match\n";
        for (const FlagReport& r : reports) {
            std::cout << "  " << r.d << "  " << r.rank << "  " << r.expected_rank << "  "
                      << divisors_str(r.torsion) << "  " << (r.match ? "yes" : "NO") << "\n";
        }
    }
    return all_match ? 0 : 1;
}

int run_chern(const std::string& check, int r, const std::string& law_name, int trunc,
              const std::vector<long long>& a, const std::string& format) {
    CheckOutcome out;
    std::string detail_name;
    bool symbolic_law = law_name == "symbolic" || law_name == "elliptic-symbolic";
    if (check == "gamma") {
        /* the symbolic families carry no coefficients below degree 2 */
        int class_degree = trunc > 0 ? trunc : (symbolic_law ? std::max(r, 2) : r);
        FormalGroupLaw law = make_law(law_name, class_degree, a);
        out = verify_gamma_congruence(law, r, class_degree);
        detail_name = "gamma congruence";
    } else if (check == "exterior-recursion") {
        int class_degree = trunc > 0 ? trunc : r + 1;
        FormalGroupLaw law = make_law(law_name, class_degree, a);
        out = verify_exterior_recursion(law, r);
        detail_name = "exterior recursion";
    } else {
        throw StructuralError("unknown check: " + check);
    }

    if (format == "json") {
        nlohmann::ordered_json j;
        j["check"] = check;
        j["r"] = r;
        j["fgl_from"] = law_name;
        j["ok"] = out.ok;
        if (!out.ok) j["detail"] = out.detail;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << detail_name << ", r=" << r << ", law " << law_name << ": "
                  << (out.ok ? "PASS" : "FAIL " + out.detail) << "\n";
    }
    return out.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"truncated formal group algebra toolkit"};
    app.require_subcommand(1);

    std::string format = "table";

    auto* fgl = app.add_subcommand("fgl", "print a law with inverse, logarithm, axiom check");
    std::string fgl_law;
    int fgl_trunc = 6;
    std::vector<long long> fgl_a;
    fgl->add_option("--law", fgl_law, "additive|multiplicative|lorentz|elliptic|elliptic-symbolic|symbolic")
        ->required();
    fgl->add_option("--trunc", fgl_trunc, "truncation order (default 6)");
    fgl->add_option("--a", fgl_a, "elliptic coefficients a1,a2,a3,a4,a6")->delimiter(',');
    fgl->add_option("--format", format, "table|json");

    auto* expo = app.add_subcommand("exponent", "generalized exponent of a deformation");
    std::string e_type, e_from, e_to, e_pool, e_policy;
    int e_d = 0, e_trunc = 0;
    std::vector<long long> e_afrom, e_ato;
    expo->add_option("--type", e_type, "root system, e.g. A2, B3, G2")->required();
    expo->add_option("--from", e_from, "source law")->required();
    expo->add_option("--to", e_to, "target law")->required();
    expo->add_option("--d", e_d, "degree")->required();
    expo->add_option("--trunc", e_trunc, "truncation order (default d+2)");
    expo->add_option("--a-from", e_afrom, "elliptic coefficients for --from")->delimiter(',');
    expo->add_option("--a-to", e_ato, "elliptic coefficients for --to")->delimiter(',');
    expo->add_option("--pool", e_pool, "generator pool JSON file");
    expo->add_option("--policy", e_policy, "theta_only|orbit_sums|combined");
    expo->add_option("--format", format, "table|json");

    auto* flag = app.add_subcommand("flag", "rank and torsion of the graded flag quotient");
    std::string f_type, f_law = "additive", f_ring = "Z", f_pool, f_policy;
    int f_dmax = 0, f_trunc = 0;
    std::vector<long long> f_a;
    flag->add_option("--type", f_type, "root system")->required();
    flag->add_option("--fgl", f_law, "law (default additive)");
    flag->add_option("--ring", f_ring, "Z | Q | Z[1/p,...] (default Z)");
    flag->add_option("--dmax", f_dmax, "run degrees 0..dmax")->required();
    flag->add_option("--trunc", f_trunc, "truncation order (default dmax+2)");
    flag->add_option("--a", f_a, "elliptic coefficients")->delimiter(',');
    flag->add_option("--pool", f_pool, "generator pool JSON file");
    flag->add_option("--policy", f_policy, "theta_only|orbit_sums|combined");
    flag->add_option("--format", format, "table|json");

    auto* chern = app.add_subcommand("chern", "characteristic-class identities");
    std::string c_check, c_law = "symbolic";
    int c_r = 0, c_trunc = 0;
    std::vector<long long> c_a;
    chern->add_option("--check", c_check, "gamma|exterior-recursion")->required();
    chern->add_option("--r", c_r, "bundle rank")->required();
    chern->add_option("--law", c_law, "law (default symbolic)");
    chern->add_option("--trunc", c_trunc, "class degree override");
    chern->add_option("--a", c_a, "elliptic coefficients")->delimiter(',');
    chern->add_option("--format", format, "table|json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (format != "table" && format != "json")
            throw StructuralError("unknown format: " + format);
        if (app.got_subcommand(fgl)) return run_fgl(fgl_law, fgl_trunc, fgl_a, format);
        if (app.got_subcommand(expo)) {
            int trunc = e_trunc > 0 ? e_trunc : e_d + 2;
            return run_exponent(e_type, e_from, e_to, e_d, trunc, e_afrom, e_ato, e_pool, e_policy,
                                format);
        }
        if (app.got_subcommand(flag)) {
            int trunc = f_trunc > 0 ? f_trunc : f_dmax + 2;
            return run_flag(f_type, f_law, f_ring, f_dmax, trunc, f_a, f_pool, f_policy, format);
        }
        if (app.got_subcommand(chern)) return run_chern(c_check, c_r, c_law, c_trunc, c_a, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
