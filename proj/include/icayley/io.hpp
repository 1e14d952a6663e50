#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "icayley/group.hpp"
#include "icayley/morphisms.hpp"
#include "icayley/presentation.hpp"

namespace icayley {

// Cayley-table format "cgt1":
//   cgt1 <n>
//   labels <name> ... <name>        (optional, n space-free names)
//   # recipe: <recipe string>       (optional metadata comment)
//   <n rows of n space-separated indices>
// Comment lines starting with '#' are permitted anywhere before the rows.
// save_group emits the exact layout above, so save -> load -> save is
// byte-identical. Errors: IoError on unreadable/unwritable paths,
// FormatError (1-based line) on malformed content, including rows that are
// not permutations; deeper table defects surface as NotAGroup.
void save_group(const FiniteGroup& g, const std::string& path);
FiniteGroup load_group(const std::string& path, std::uint64_t seed = kDefaultSeed,
                       bool allow_oversize = false);

// Central-type presentation format "ctp1":
//   ctp1 p=<p> m=<m> s=<s>
//   sq <i> <s digits>               (one line per generator, i = 0..m-1)
//   comm <i> <j> <s digits>         (one line per pair i < j)
// Missing sq/comm lines default to zero vectors; digits are mod-p exponents.
void save_presentation(const CTPresentation& pres, const std::string& path);
CTPresentation load_presentation(const std::string& path);

// Automorphism format "aut1":
//   aut1 <n>
// followed by either one line of n image indices, or the generator-image
// shorthand `gens: i1 i2 ... -> j1 j2 ...` (resolved against g and certified
// via make_automorphism, so bad data throws NotAutomorphism).
void save_automorphism(const AutomorphismMap& a, const std::string& path);
AutomorphismMap load_automorphism(const FiniteGroup& g, const std::string& path);

// Optional on-disk cache rooted at $ICAYLEY_CACHE_DIR. cache_file returns
// <dir>/<fnv1a64(key)>.<ext>, or nullopt when the variable is unset/empty.
std::optional<std::string> cache_directory();
std::optional<std::string> cache_file(const std::string& key, const std::string& ext);

}  // namespace icayley
