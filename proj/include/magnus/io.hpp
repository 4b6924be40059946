#ifndef MAGNUS_IO_HPP
#define MAGNUS_IO_HPP

#include <string>

#include "json.hpp"
#include "magnus/derivation.hpp"
#include "magnus/expansion.hpp"
#include "magnus/free_group.hpp"
#include "magnus/twist_johnson.hpp"

namespace magnus {

using Json = nlohmann::ordered_json;

/// {"genus": g, "truncation": N, "terms": [{"mono": [...], "coeff": "p/q"}, ...]}
Json tensor_to_json(const Tensor& t);
/// Validates shape, letter range, degrees and canonical coefficient text;
/// throws std::invalid_argument. Duplicate monomials are rejected.
Tensor tensor_from_json(const Json& j);

/// Tensor JSON plus "lie": true.
Json lie_to_json(const Tensor& t);
/// Re-verifies the Lie property when "lie" is true.
Tensor lie_from_json(const Json& j);

/// Tensor view plus "view": "tensor".
Json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j);

/// {"genus", "truncation", "kind", "generators": [{"name": "a1", "log": <tensor>}, ...]};
/// raw-mode expansions store "raw" (theta(x) - 1) instead of "log".
Json expansion_to_json(const Expansion& theta);
Expansion expansion_from_json(const Json& j);

/// {"genus", "images": ["a1 b1", ...], "factorization": ["alpha1", ...]}
Json automorphism_to_json(const FreeAutomorphism& phi);
/// When a factorization is present it must reproduce the images.
FreeAutomorphism automorphism_from_json(const Json& j);

Json johnson_to_json(const JohnsonComponent& c);

Json read_json_file(const std::string& path);
/// Throws std::runtime_error when the file cannot be written.
void write_json_file(const std::string& path, const Json& j);

}  // namespace magnus

#endif  // MAGNUS_IO_HPP
