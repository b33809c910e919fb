#pragma once

// JSON builders shared by the CLI commands. Internal to the cli library.

#include <json.hpp>

#include "tcconf/certificate.hpp"
#include "tcconf/lemmas.hpp"
#include "tcconf/zcl.hpp"

namespace tcconf::cli {

using Json = nlohmann::ordered_json;

Json word_json(const ProductAlgebra& alg, const TensorWord& word);
Json tensor_json(const TensorElement& t);
Json record_json(const TcRecord& rec);
/// `agrees` is only reported for E_inf certificates.
Json certificate_json(const Certificate& cert, const std::optional<bool>& agrees);
bool certificate_verified(const Certificate& cert, const std::optional<bool>& agrees);
Json identity_json(const IdentityCheck& check);
Json zcl_json(const ZclResult& result);

}  // namespace tcconf::cli
