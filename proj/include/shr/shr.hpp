#pragma once

#include "shr/subset.hpp"
#include "shr/errors.hpp"
#include "shr/semihyperring.hpp"
#include "shr/constructors.hpp"
#include "shr/catalog.hpp"
#include "shr/ideals.hpp"
#include "shr/classify.hpp"
#include "shr/spectrum.hpp"
#include "shr/textio.hpp"
#include "shr/conformance.hpp"
#include "shr/corpus.hpp"
