#pragma once

// Self-contained evidence objects. Each one carries its ring, generators
// and query so that `verify-cert` can re-check it without the problem file.
// Polynomials and matrices are stored as text in the ring's variables.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qnss/quat_nss.hpp"
#include "qnss_cli/problem.hpp"

namespace qnss::cli {

using nlohmann::json;

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t h);

json ring_json(const RingHeader& ring);
RingHeader ring_from_json(const json& j);

/// Variables of a certificate ring: vars, then a11..ann when symbolic.
std::vector<std::string> certificate_variables(const std::vector<std::string>& vars, std::size_t n, bool symbolic);

json matrix_certificate_json(const PowerCertificate& cert, const MatPoly& F, const std::vector<MatPoly>& gens,
                             const std::vector<std::string>& vars);
json quat_certificate_json(const QuatPowerCertificate& cert, const std::vector<std::string>& vars);
json matrix_witness_json(const DirectionalPoint& w, const MatPoly& F, const std::vector<MatPoly>& gens,
                         const std::vector<std::string>& vars);
json quat_witness_json(const GoodPoint& a, const QPoly& f, const std::vector<QPoly>& gens,
                       const std::vector<std::string>& vars);
json probe_json(const GaussMatrix& A, const MatPoly& F, const std::vector<MatPoly>& gens,
                const std::vector<std::string>& vars);

std::string gauss_matrix_text(const GaussMatrix& A);
std::vector<std::string> texts(const std::vector<QPoly>& ps, const std::vector<std::string>& vars);
std::vector<std::string> texts(const std::vector<MatPoly>& ms, const std::vector<std::string>& vars);

struct Check {
  std::string kind;
  bool valid = true;
  std::vector<std::string> problems;
};

/// Re-checks one evidence object from scratch. Malformed objects come back
/// invalid with a problem message.
Check verify_evidence(const json& evidence, const GroebnerOptions& options);

}  // namespace qnss::cli
