#pragma once

#include "levysobolev/constants.hpp"
#include "levysobolev/error.hpp"
#include "levysobolev/index_lab.hpp"
#include "levysobolev/levy_density.hpp"
#include "levysobolev/levy_measure.hpp"
#include "levysobolev/params_io.hpp"
#include "levysobolev/report_json.hpp"
#include "levysobolev/spectral.hpp"
#include "levysobolev/symbol.hpp"
