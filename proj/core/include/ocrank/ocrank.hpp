#pragma once

#include "ocrank/components.hpp"
#include "ocrank/counterset.hpp"
#include "ocrank/errors.hpp"
#include "ocrank/harness.hpp"
#include "ocrank/rank.hpp"
#include "ocrank/regular.hpp"
#include "ocrank/transducer.hpp"
#include "ocrank/words.hpp"
