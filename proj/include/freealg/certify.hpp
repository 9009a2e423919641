#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "freealg/liedep.hpp"
#include "freealg/limgen.hpp"
#include "freealg/parse.hpp"
#include "freealg/weakalg.hpp"

namespace freealg {

using Json = nlohmann::json;

struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "q" for the rationals, "gf:p" for a prime field.
std::string field_name(unsigned long characteristic);
unsigned long field_characteristic(const std::string& name);

/// Bracket-monomial slot syntax: "b3" is the third slot, "[b1,[b1,b2]]" a
/// nested bracket.
LieMonomial monomial_from_string(const std::string& text);
Json template_json(const LieTemplate& f);
LieTemplate template_from_json(const Json& j, std::size_t arity,
                               unsigned long characteristic);

/// Certificate builders.  Every certificate carries kind, inputs, witness,
/// parameters{field, gens, ...} and a verified flag set by re-checking the
/// assembled payload.
Json make_dependence_cert(const std::vector<NcPoly>& family,
                          const DependenceWitness& w, const GenTable& gens);
Json make_series_dependence_cert(const std::vector<WindowSeries>& family,
                                 const DependenceWitness& w,
                                 const GenTable& gens);
Json make_reduction_cert(const NcPoly& a, const std::vector<NcPoly>& family,
                         const DependenceWitness& w, const GenTable& gens);
Json make_series_inverse_cert(const WindowSeries& s, const WindowSeries& inv,
                              const GenTable& gens);
Json make_series_reduction_cert(const WindowSeries& a,
                                const std::vector<WindowSeries>& family,
                                const DependenceWitness& w,
                                const GenTable& gens);
Json make_lie_check_cert(const NcPoly& p, bool lie, const GenTable& gens);
Json make_lie_express_cert(const LiePoly& target,
                           const std::vector<LiePoly>& family,
                           const LieDependenceWitness& w, const GenTable& gens);
Json make_lie_dependence_cert(const std::vector<LiePoly>& family,
                              const LieDependenceWitness& w,
                              const GenTable& gens);
Json make_free_generators_cert(const GradedPresentation& pres, bool lie_mode,
                               const std::vector<NcPoly>& output,
                               const GenTable& gens);
Json make_span_check_cert(const std::vector<NcPoly>& elements,
                          const std::vector<unsigned>& window, long cap,
                          bool spans, const GenTable& gens);
Json make_relfree_cert(const std::vector<LiePoly>& elements,
                       const std::vector<unsigned>& window, long cap,
                       const RelFreeResult& r, const GenTable& gens);
Json make_automorphism_cert(const AutomorphismResult& a, const GenTable& gens);
Json make_membership_cert(const LiePoly& target,
                          const std::vector<LiePoly>& generators,
                          const MembershipResult& r, const GenTable& gens);
Json make_min_degree_cert(const std::vector<LiePoly>& generators,
                          long length_cap, long value, const GenTable& gens);

/// Re-check a certificate from its serialized form alone.  Dependent and
/// expressible witnesses are re-verified arithmetically; negative verdicts
/// are re-derived by the engine.  Throws CertificateError on malformed or
/// unknown input.
bool verify_certificate(const Json& cert);

}  // namespace freealg
