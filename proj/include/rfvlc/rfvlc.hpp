#pragma once
#ifndef RFVLC_RFVLC_HPP
#define RFVLC_RFVLC_HPP

#include "rfvlc/fso_channel.hpp"
#include "rfvlc/mc/engine.hpp"
#include "rfvlc/mc/philox.hpp"
#include "rfvlc/mc/samplers.hpp"
#include "rfvlc/relay.hpp"
#include "rfvlc/rf_channel.hpp"
#include "rfvlc/scenario.hpp"
#include "rfvlc/special/bessel_k.hpp"
#include "rfvlc/special/gamma.hpp"
#include "rfvlc/units.hpp"
#include "rfvlc/vlc_channel.hpp"

#endif  // RFVLC_RFVLC_HPP
