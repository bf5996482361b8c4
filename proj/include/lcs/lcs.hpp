#pragma once

#include "lcs/aspects.hpp"
#include "lcs/fan.hpp"
#include "lcs/grassmann.hpp"
#include "lcs/model.hpp"
#include "lcs/numdata.hpp"
#include "lcs/poset.hpp"
#include "lcs/strata.hpp"
#include "lcs/weier.hpp"
