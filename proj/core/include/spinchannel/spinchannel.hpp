// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "spinchannel/eigensolve.hpp"
#include "spinchannel/entangle.hpp"
#include "spinchannel/error.hpp"
#include "spinchannel/krylov.hpp"
#include "spinchannel/scaling.hpp"
#include "spinchannel/spin_core.hpp"
#include "spinchannel/teleport.hpp"
#include "spinchannel/thermal.hpp"
#include "spinchannel/transfer.hpp"
