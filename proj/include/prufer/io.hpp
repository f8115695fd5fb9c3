#pragma once

#include "prufer/almost_dedekind.hpp"
#include "prufer/hlocal.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <variant>

namespace prufer {

using Json = nlohmann::ordered_json;

/// Parsed presentation file: either a finite slot presentation or a family
/// presentation, plus the named ideals declared in the file.
struct PresentationFile {
    std::variant<DomainPresentation, FamilyPresentation> presentation;
    std::map<std::string, GlobalIdeal> ideals;     // finite kind
    std::map<std::string, ADIdeal> family_ideals;  // family kind

    bool is_finite() const { return presentation.index() == 0; }
    const DomainPresentation& finite() const { return std::get<0>(presentation); }
    const FamilyPresentation& family() const { return std::get<1>(presentation); }
};

/// Parse errors carry a line number.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

PresentationFile parse_presentation(const std::string& text);
PresentationFile load_presentation(const std::string& path);
std::string serialize_presentation(const PresentationFile& f);

std::string cut_to_text(const Cut& c);
Cut parse_cut(const std::string& text, int quad_d, int line_no);

Json cut_json(const Cut& c);
Json ideal_json(const GlobalIdeal& i);
Json factorization_json(const Factorization& f);
Json weak_factorization_json(const FamilyPresentation& p, const WeakFactorization& w);
Json profile_json(const FamilyPresentation& p, const ValuationProfile& v);
Json fixture_json(const FixtureReport& r);

std::string factorization_table(const Factorization& f);

}  // namespace prufer
