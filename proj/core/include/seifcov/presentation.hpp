#pragma once
// Finitely presented groups and bounded Tietze simplification.

#include <string>
#include <vector>

#include "seifcov/word.hpp"

namespace seifcov {

struct Presentation {
    std::vector<Generator> generators;  // declared, ordered
    std::vector<Word> relators;

    bool declares(Generator g) const;
};

// Throws std::invalid_argument if some relator uses an undeclared generator.
void check_well_formed(const Presentation& p);

// Tietze simplification: drops empty relators and eliminates generators that
// occur in exactly one syllable of some relator, with exponent +-1 (solve the
// relator for that generator and substitute everywhere). At most one pass per
// generator; best effort only - callers never rely on reaching a minimal form.
// The group (hence its abelianization) is unchanged.
Presentation tietze_simplify(const Presentation& p);

std::string render(const Presentation& p);

}  // namespace seifcov
