#pragma once

#include "recur2/catalog.hpp"
#include "recur2/error.hpp"
#include "recur2/exact_algebra.hpp"
#include "recur2/fuzz.hpp"
#include "recur2/identities.hpp"
#include "recur2/recurrence.hpp"
#include "recur2/serialize.hpp"
#include "recur2/words.hpp"
