#pragma once
#include <string>
#include <vector>

#include "fgx/invariants.hpp"

namespace fgx {

/* How to read a computed generalized exponent:
     Exact             both side lattices are certified, tau is the true value
     MultipleOfTrueTau the source lattice may be a proper subgroup, so the
                       computed value is a (possibly trivial) multiple
     GeneratorLimited  the target lattice may be under-generated, so no
                       divisibility relation with the true value is claimed */
enum class TauCertainty { Exact, MultipleOfTrueTau, GeneratorLimited };

std::string tau_certainty_name(TauCertainty c);
TauCertainty parse_tau_certainty(const std::string& s);

struct ExponentReport {
    std::string type;  // root system name, e.g. "B3"
    int d = 0;
    std::string fgl_from, fgl_to;
    mpz_class tau;
    TauCertainty certainty = TauCertainty::GeneratorLimited;
    /* Elementary divisors of (L + L') / L: finite orders > 1 ascending, then
       one 0 per free factor; empty when L' is contained in L. */
    std::vector<mpz_class> elementary_divisors;
    int source_rows = 0, target_rows = 0;
    double wall_ms = 0.0;  // measured; deliberately not serialized
};

/* Degree-d invariant-ideal slice lattice for one law: the exact graded
   construction for the additive law, the generator-pool matrix otherwise
   (null pool means the default pool for (rs, d)). */
GradedSliceMatrix side_lattice(const RootSystem& rs, const FormalGroupLaw& law, int d,
                               const GeneratorPool* pool);

/* Smallest N >= 1 with N * (target slice) inside the source slice: the
   generalized exponent of the deformation from `from` to `to` in degree d.
   Both laws must have integer coefficients and truncation >= d. Throws when
   the rational spans differ (under-generated pool). */
ExponentReport tau(const RootSystem& rs, const FormalGroupLaw& from, const FormalGroupLaw& to,
                   int d, const GeneratorPool* pool = nullptr);

std::string exponent_to_json(const ExponentReport& r);
ExponentReport exponent_from_json(const std::string& text);

struct FlagReport {
    std::string type;
    int d = 0;
    std::string fgl;
    std::string ring;
    int rank = 0, expected_rank = 0;
    std::vector<mpz_class> torsion;  // elementary divisors > 1, ascending
    bool match = false;
    LatticeCertainty certainty = LatticeCertainty::Subgroup;
};

/* Rank and torsion of S^d(weight lattice) / (degree-d invariant-ideal slice)
   over Z, Q, or Z[1/p,...]: the gamma-graded comparison for the full flag
   variety. The expected rank is the number of Weyl elements of length d. */
FlagReport flag_diagnostics(const RootSystem& rs, const FormalGroupLaw& law, int d,
                            const RingPtr& ring, const GeneratorPool* pool = nullptr);

std::string flag_to_json(const FlagReport& r);

/* Annihilator bound for degree-d torsion transported through a deformation
   round trip: 1 in degree 1, otherwise fwd.tau times the reference
   annihilator. The backward report is validated for structural consistency
   (same type and degree, laws swapped). */
mpz_class annihilator_bound(const ExponentReport& fwd, const ExponentReport& bwd,
                            const mpz_class& reference);

} // namespace fgx
