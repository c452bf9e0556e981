#pragma once

#include "sumdiff/errors.hpp"
#include "sumdiff/integer_set.hpp"
#include "sumdiff/sumset.hpp"
#include "sumdiff/profile.hpp"
#include "sumdiff/constructions.hpp"
#include "sumdiff/search.hpp"
#include "sumdiff/chains.hpp"
#include "sumdiff/io.hpp"
#include "sumdiff/reference.hpp"
#include "sumdiff/report.hpp"
