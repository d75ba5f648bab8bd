#ifndef WORDWALK_WORDWALK_HPP
#define WORDWALK_WORDWALK_HPP

// Umbrella header for the walk-generation calculus: words and their
// palindromic defects, strolls and walks, the generation relation with its
// reduction system and unique primitive generators, walk-pair agreement and
// decomposition, and the k-bonacci word families.

#include "wordwalk/agreement.hpp"
#include "wordwalk/edits.hpp"
#include "wordwalk/error.hpp"
#include "wordwalk/format.hpp"
#include "wordwalk/generation.hpp"
#include "wordwalk/kbonacci.hpp"
#include "wordwalk/oracle.hpp"
#include "wordwalk/reduction.hpp"
#include "wordwalk/svg.hpp"
#include "wordwalk/verify.hpp"
#include "wordwalk/walk.hpp"
#include "wordwalk/word.hpp"

#endif
