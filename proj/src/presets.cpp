#include "braidops/io.hpp"

#include "braidops/errors.hpp"

namespace braidops {

namespace {

// Shipped presentations, emitted byte-for-byte by `presets emit`.

const std::string kDendriform = R"({
  "name": "dendriform",
  "generators": ["prec", "succ"],
  "star": {"prec": "1", "succ": "1"},
  "relations": [
    {
      "left": [{"inner": "prec", "outer": "prec", "coeff": "1"}],
      "right": [
        {"outer": "prec", "inner": "prec", "coeff": "1"},
        {"outer": "prec", "inner": "succ", "coeff": "1"}
      ]
    },
    {
      "left": [{"inner": "succ", "outer": "prec", "coeff": "1"}],
      "right": [{"outer": "succ", "inner": "prec", "coeff": "1"}]
    },
    {
      "left": [
        {"inner": "prec", "outer": "succ", "coeff": "1"},
        {"inner": "succ", "outer": "succ", "coeff": "1"}
      ],
      "right": [{"outer": "succ", "inner": "succ", "coeff": "1"}]
    }
  ],
  "unit_action": {
    "alpha": {"prec": "1", "succ": "0"},
    "beta": {"prec": "0", "succ": "1"}
  }
}
)";

const std::string kTridendriform = R"({
  "name": "tridendriform",
  "generators": ["prec", "succ", "mid"],
  "star": {"prec": "1", "succ": "1", "mid": "1"},
  "relations": [
    {
      "left": [{"inner": "prec", "outer": "prec", "coeff": "1"}],
      "right": [
        {"outer": "prec", "inner": "prec", "coeff": "1"},
        {"outer": "prec", "inner": "succ", "coeff": "1"},
        {"outer": "prec", "inner": "mid", "coeff": "1"}
      ]
    },
    {
      "left": [{"inner": "succ", "outer": "prec", "coeff": "1"}],
      "right": [{"outer": "succ", "inner": "prec", "coeff": "1"}]
    },
    {
      "left": [
        {"inner": "prec", "outer": "succ", "coeff": "1"},
        {"inner": "succ", "outer": "succ", "coeff": "1"},
        {"inner": "mid", "outer": "succ", "coeff": "1"}
      ],
      "right": [{"outer": "succ", "inner": "succ", "coeff": "1"}]
    },
    {
      "left": [{"inner": "mid", "outer": "prec", "coeff": "1"}],
      "right": [{"outer": "mid", "inner": "prec", "coeff": "1"}]
    },
    {
      "left": [{"inner": "prec", "outer": "mid", "coeff": "1"}],
      "right": [{"outer": "mid", "inner": "succ", "coeff": "1"}]
    },
    {
      "left": [{"inner": "succ", "outer": "mid", "coeff": "1"}],
      "right": [{"outer": "succ", "inner": "mid", "coeff": "1"}]
    },
    {
      "left": [{"inner": "mid", "outer": "mid", "coeff": "1"}],
      "right": [{"outer": "mid", "inner": "mid", "coeff": "1"}]
    }
  ],
  "unit_action": {
    "alpha": {"prec": "1", "succ": "0", "mid": "0"},
    "beta": {"prec": "0", "succ": "1", "mid": "0"}
  }
}
)";

const std::string kAssociative = R"({
  "name": "associative",
  "generators": ["star"],
  "star": {"star": "1"},
  "relations": [
    {
      "left": [{"inner": "star", "outer": "star", "coeff": "1"}],
      "right": [{"outer": "star", "inner": "star", "coeff": "1"}]
    }
  ],
  "unit_action": {
    "alpha": {"star": "1"},
    "beta": {"star": "1"}
  }
}
)";

} // namespace

std::vector<std::string> preset_names() { return {"dendriform", "tridendriform", "associative"}; }

const std::string& preset_text(const std::string& name) {
    if (name == "dendriform") return kDendriform;
    if (name == "tridendriform") return kTridendriform;
    if (name == "associative") return kAssociative;
    throw ParseError("unknown preset '" + name + "'");
}

} // namespace braidops
