#ifndef MVCRYSTAL_IO_HPP
#define MVCRYSTAL_IO_HPP

#include <string>

#include "mvcrystal/bz.hpp"
#include "mvcrystal/crystal.hpp"

namespace mv {

/// Classical name of a chamber weight: a subset such as "13" in type A, a
/// signed subset such as "1-23" in type C, "" for unlabelled data.
std::string chamber_name(const WeylGroup& g, ChamberId c);
/// Accepts "13", "{1,3}", "1-23", "{1,-2,3}" and the Unicode minus sign.
/// Throws ParseError.
ChamberId parse_chamber_name(const WeylGroup& g, const std::string& name);

/// "L<level>:<c_1,...,c_r>" with a 1-based level.
std::string chamber_key(const WeylGroup& g, ChamberId c);
ChamberId parse_chamber_key(const WeylGroup& g, const std::string& key);

/// BZ file text: {"cartan", "labels", "entries": [{"key", "value", "pretty"}]}.
std::string emit_bz(const BZDatum& m);
/// Throws ParseError for malformed text or keys that do not cover Gamma
/// exactly, UnsupportedType for G2 or non-finite Cartan matrices.
BZDatum parse_bz(const std::string& text);
BZDatum read_bz_file(const std::string& path);

/// Nodes carry their Lusztig datum for `word` (empty: the lex-least word)
/// and their weight mu_e. Words are given with 0-based letters.
std::string graph_to_json(const CrystalGraph& g, const ReducedWord& word = {});
std::string graph_to_dot(const CrystalGraph& g, const ReducedWord& word = {});

/// "1,2,1" -> {1,2,1}.
std::vector<Int> parse_int_list(const std::string& text);

}  // namespace mv

#endif  // MVCRYSTAL_IO_HPP
