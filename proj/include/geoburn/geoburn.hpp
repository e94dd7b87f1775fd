#ifndef GEOBURN_GEOBURN_HPP
#define GEOBURN_GEOBURN_HPP

#include "geoburn/bench.hpp"
#include "geoburn/burn2d.hpp"
#include "geoburn/core.hpp"
#include "geoburn/cover.hpp"
#include "geoburn/generate.hpp"
#include "geoburn/hardness.hpp"
#include "geoburn/io.hpp"
#include "geoburn/oracle.hpp"
#include "geoburn/ptas1d.hpp"
#include "geoburn/svg.hpp"

#endif // GEOBURN_GEOBURN_HPP
