#ifndef LNDT_LNDT_HPP
#define LNDT_LNDT_HPP

#include "lndt/bushn.hpp"
#include "lndt/codes.hpp"
#include "lndt/error.hpp"
#include "lndt/instances.hpp"
#include "lndt/laws.hpp"
#include "lndt/spread.hpp"
#include "lndt/values.hpp"

#endif  // LNDT_LNDT_HPP
