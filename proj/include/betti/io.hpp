#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "betti/homology.hpp"
#include "betti/ideal.hpp"
#include "betti/table.hpp"

namespace betti {

enum class TableFormat { text, csv, json };
TableFormat parse_format(const std::string& name);

// Text ideals: one monomial per line, `#` comments and blank lines ignored.
// The ring size is the largest variable index seen unless n_override raises it.
MonomialIdeal read_ideal_text(std::istream& in, std::optional<int> n_override = {});
// {"n": int, "generators": [[e1..en], ...]}
MonomialIdeal read_ideal_json(const std::string& text);
// Dispatches on leading '{'.
MonomialIdeal read_ideal_file(const std::string& path, std::optional<int> n_override = {});

// {"n": int, "nonfaces": [[v1,...], ...]}, vertices 1-based in the file.
NonfaceComplex read_nonfaces_json(const std::string& text);
NonfaceComplex read_nonfaces_file(const std::string& path);
// One "u v" pair per line (1-based), `#` comments ignored; builds the clique
// complex's nonfaces. Vertex count = max label unless n_override raises it.
NonfaceComplex read_graph_file(const std::string& path, std::optional<int> n_override = {});

std::string render_table(const BettiTable& t, TableFormat fmt);
// csv/json only (text is display-oriented, not round-trippable).
BettiTable parse_table(const std::string& text, TableFormat fmt);

std::string render_multigraded(const MultigradedBetti& mg, TableFormat fmt);
std::string render_homology(const std::vector<std::int64_t>& dims, TableFormat fmt);

std::string render_ideal(const MonomialIdeal& ideal);

}  // namespace betti
