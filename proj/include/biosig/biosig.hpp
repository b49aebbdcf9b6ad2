// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#pragma once

#include "biosig/classify.hpp"
#include "biosig/denoise.hpp"
#include "biosig/dwt.hpp"
#include "biosig/encoders.hpp"
#include "biosig/error.hpp"
#include "biosig/fft.hpp"
#include "biosig/filters.hpp"
#include "biosig/image_io.hpp"
#include "biosig/matrix.hpp"
#include "biosig/pipeline.hpp"
#include "biosig/qrs.hpp"
#include "biosig/signal.hpp"
#include "biosig/synthetic.hpp"
#include "biosig/time_frequency.hpp"
#include "biosig/wavelet.hpp"
