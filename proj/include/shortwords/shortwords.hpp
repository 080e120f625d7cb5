#pragma once

// Umbrella header for the whole toolkit.

#include "shortwords/coset_action.hpp"
#include "shortwords/errors.hpp"
#include "shortwords/gens.hpp"
#include "shortwords/perm.hpp"
#include "shortwords/perm_group.hpp"
#include "shortwords/short_words.hpp"
#include "shortwords/structure.hpp"
#include "shortwords/table_io.hpp"
#include "shortwords/words.hpp"
