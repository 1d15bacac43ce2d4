#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>

#include "amorph/scheme.hpp"

namespace amorph {

/// Scheme file: a header line "v d" followed by v rows of v
/// whitespace-separated labels in [0, d]. Blank lines and lines whose first
/// non-blank character is '#' are ignored. Throws ParseError with the
/// 1-based line and column of the offending token.
LabelMatrix parse_scheme_text(std::string_view text);

/// Reads and parses a scheme file without validating the axioms.
LabelMatrix load_label_matrix(const std::filesystem::path& path);

/// Reads, parses and validates. Throws ParseError or AxiomViolation.
AssociationScheme load_scheme(const std::filesystem::path& path);

/// Normalized form: optional "# comment" lines, the header, then one
/// space-separated row per line.
void write_scheme(std::ostream& out, const LabelMatrix& labels, std::string_view comment = {});
std::string scheme_to_text(const LabelMatrix& labels, std::string_view comment = {});
void save_scheme(const std::filesystem::path& path, const LabelMatrix& labels, std::string_view comment = {});

}  // namespace amorph
