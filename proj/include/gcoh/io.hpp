#pragma once

#include "gcoh/bundles.hpp"
#include "gcoh/gerbes.hpp"
#include "gcoh/morita.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace gcoh {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file (InputError on failure).
Json load_json(const std::filesystem::path& path);
/// A field that is either an inline document or a path relative to `dir`.
Json resolve(const Json& field, const std::filesystem::path& dir);

FiniteGroupoid groupoid_from_json(const Json& doc, const std::filesystem::path& dir = {});
Json groupoid_to_json(const FiniteGroupoid& g);

SimplicialComplex complex_from_json(const Json& doc, const std::filesystem::path& dir = {});
Json complex_to_json(const SimplicialComplex& k);

Cover cover_from_json(const Json& doc, const std::filesystem::path& dir = {});
Json cover_to_json(const Cover& c);

/// groupoid document -> finite (or constant product with "times"), cover document -> Cech.
CarriedGroupoid base_from_json(const Json& doc, const std::filesystem::path& dir = {});

struct MorphismInput {
    CarriedGroupoid source;
    CarriedGroupoid target;
    GroupoidMorphism map;
};
MorphismInput morphism_from_json(const Json& doc, const std::filesystem::path& dir = {});
Json morphism_to_json(const CarriedGroupoid& source, const CarriedGroupoid& target, const GroupoidMorphism& f,
                      const Json& source_doc, const Json& target_doc);

int cochain_degree(const Json& doc);
/// Entries {"p", "cell", "simplex", "value"} or a "dense" array in cell order.
RationalVector cochain_from_json(const Json& doc, const TotalComplex& t);
Json cochain_to_json(const TotalComplex& t, int n, const RationalVector& x, bool circle = false);
/// Cochain (or chain) on the simplices of K of the document's degree, in simplices_of_dim order.
RationalVector simplicial_cochain_from_json(const Json& doc, const SimplicialComplex& k);

ExtensionGroupoid extension_from_json(const Json& doc, const std::filesystem::path& dir = {});
Json extension_to_json(const ExtensionGroupoid& r);

Json integer_json(const Integer& v);
Json presentation_to_json(const AbelianGroupPresentation& p, const Coeff& coeff);
Json class_to_json(const TotalComplex& t, const CohomologyClass& c);

/// Human label of a coefficient free summand ("Z", "Q", "Q/Z", "Z/n").
std::string free_symbol(const Coeff& coeff);

}  // namespace gcoh
