#pragma once

#define ZEROACF_VERSION "0.1.0"
