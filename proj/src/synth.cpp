// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "typobench/compose.hpp"
#include "typobench/errors.hpp"
#include "typobench/font.hpp"
#include "typobench/grid.hpp"
#include "typobench/image.hpp"
#include "typobench/png_io.hpp"
#include "typobench/rng.hpp"

namespace typobench {

namespace {

struct Paint {
  std::uint8_t r, g, b;
};

const std::vector<std::pair<std::string, Paint>>& shape_colors() {
  static const std::vector<std::pair<std::string, Paint>> colors = {
      {"red", {210, 50, 50}},    {"orange", {230, 140, 40}}, {"yellow", {225, 210, 60}},
      {"green", {60, 160, 70}},  {"blue", {60, 90, 210}},    {"purple", {150, 60, 170}},
  };
  return colors;
}

const std::vector<std::string>& shape_names() {
  static const std::vector<std::string> names = {"circle", "square",  "triangle",
                                                 "ring",   "diamond", "cross"};
  return names;
}

void fill_rect(RasterImage& img, int x0, int y0, int x1, int y1, Paint p) {
  x0 = std::max(0, x0);
  y0 = std::max(0, y0);
  x1 = std::min(img.width, x1);
  y1 = std::min(img.height, y1);
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) {
      std::uint8_t* px = img.at(x, y);
      px[0] = p.r;
      px[1] = p.g;
      px[2] = p.b;
    }
  }
}

void fill_circle(RasterImage& img, int cx, int cy, int radius, Paint p) {
  for (int y = std::max(0, cy - radius); y <= std::min(img.height - 1, cy + radius); ++y) {
    for (int x = std::max(0, cx - radius); x <= std::min(img.width - 1, cx + radius); ++x) {
      const int dx = x - cx;
      const int dy = y - cy;
      if (dx * dx + dy * dy <= radius * radius) {
        std::uint8_t* px = img.at(x, y);
        px[0] = p.r;
        px[1] = p.g;
        px[2] = p.b;
      }
    }
  }
}

void draw_shape(RasterImage& img, const std::string& shape, int cx, int cy, int r, Paint p) {
  if (shape == "circle") {
    fill_circle(img, cx, cy, r, p);
  } else if (shape == "square") {
    fill_rect(img, cx - r, cy - r, cx + r, cy + r, p);
  } else if (shape == "triangle") {
    for (int y = 0; y <= 2 * r; ++y) {
      const int half = static_cast<int>(std::lround(r * (static_cast<double>(y) / (2 * r))));
      const int row = cy - r + y;
      fill_rect(img, cx - half, row, cx + half + 1, row + 1, p);
    }
  } else if (shape == "ring") {
    fill_circle(img, cx, cy, r, p);
    // Reopen the middle with the background shade sampled at a corner.
    const std::uint8_t* bg = img.at(0, img.height - 1);
    fill_circle(img, cx, cy, std::max(1, r / 2), Paint{bg[0], bg[1], bg[2]});
  } else if (shape == "diamond") {
    for (int y = -r; y <= r; ++y) {
      const int half = r - std::abs(y);
      fill_rect(img, cx - half, cy + y, cx + half + 1, cy + y + 1, p);
    }
  } else if (shape == "cross") {
    const int arm = std::max(2, r / 3);
    fill_rect(img, cx - r, cy - arm, cx + r, cy + arm, p);
    fill_rect(img, cx - arm, cy - r, cx + arm, cy + r, p);
  } else {
    throw Error("unknown synthetic shape: " + shape);
  }
}

// Every generated image gets a pixel in the top-left corner encoding the
// item index, which keeps image hashes unique even when two items draw the
// same scene.
void stamp_index(RasterImage& img, int index) {
  std::uint8_t* px = img.at(0, 0);
  px[0] = static_cast<std::uint8_t>(index & 0xFF);
  px[1] = static_cast<std::uint8_t>((index >> 8) & 0xFF);
  px[2] = 37;
}

RasterImage base_canvas(int w, int h) { return RasterImage::filled(w, h, 238, 238, 238); }

struct QaEntry {
  const char* question;
  const char* options[4];
  int answer;  // index into options
};

const std::vector<QaEntry>& qa_bank() {
  static const std::vector<QaEntry> bank = {
      {"Which item is used to cut paper?", {"scissors", "pillow", "ladder", "spoon"}, 0},
      {"Which animal is known for barking?", {"fish", "dog", "snake", "sparrow"}, 1},
      {"What do people usually drink from?", {"shoe", "hammer", "cup", "brick"}, 2},
      {"Which of these can fly?", {"truck", "bicycle", "boat", "airplane"}, 3},
      {"What melts when heated?", {"ice", "rock", "bottle", "coin"}, 0},
      {"Which tool drives a nail into wood?", {"spoon", "hammer", "feather", "sponge"}, 1},
      {"What do plants need to grow?", {"darkness", "plastic", "sunlight", "glue"}, 2},
      {"Which season is usually the coldest?", {"summer", "spring", "autumn", "winter"}, 3},
      {"What is used to unlock a door?", {"key", "banana", "cloud", "pencil"}, 0},
      {"Which of these lives in water?", {"camel", "fish", "eagle", "goat"}, 1},
      {"What shows the time of day?", {"chair", "carpet", "clock", "bottle"}, 2},
      {"Which of these is a source of light?", {"stone", "blanket", "fork", "lamp"}, 3},
  };
  return bank;
}

// Assigns letters A.. to the given option texts with the ground truth at a
// seeded position, returning (choices, ground truth letter).
std::pair<std::vector<Choice>, std::string> letter_choices(std::vector<std::string> options,
                                                           std::size_t truth_index,
                                                           SplitMix64& rng) {
  const std::size_t n = options.size();
  const std::size_t target = bounded_uniform(rng, n);
  std::swap(options[truth_index], options[target]);
  std::vector<Choice> choices;
  for (std::size_t i = 0; i < n; ++i) {
    choices.push_back(Choice{std::string(1, static_cast<char>('A' + i)), options[i]});
  }
  return {choices, std::string(1, static_cast<char>('A' + target))};
}

std::string item_id(const char* prefix, int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s-%04d", prefix, index);
  return buf;
}

}  // namespace

std::filesystem::path generate_corpus(const SynthConfig& config) {
  const std::filesystem::path image_dir = config.out_dir / "images";
  std::filesystem::create_directories(image_dir);

  std::optional<Font> font;
  if (config.arithmetics > 0) {
    if (config.font_path.empty()) {
      throw Error("arithmetic items need a font to print the expression");
    }
    font = Font::load(config.font_path);
  }

  std::vector<BaseItem> items;
  int stamp = 0;

  const auto save_image = [&](const std::string& id, const RasterImage& img) {
    write_png(image_dir / (id + ".png"), img);
    return "images/" + id + ".png";
  };

  // Object: one shape on a plain background, distractor names are other
  // shapes. Half of the items carry an explicit overlay pool made of shape
  // names so the overlay can collide with a choice; the other half rely on
  // the default object pool.
  for (int i = 0; i < config.objects; ++i) {
    SplitMix64 rng(derive_stream_seed(config.seed, "synth-obj-" + std::to_string(i)));
    const std::string id = item_id("obj", i);
    const std::size_t shape_idx = bounded_uniform(rng, shape_names().size());
    const std::string& shape = shape_names()[shape_idx];
    const auto& [color_name, paint] = shape_colors()[bounded_uniform(rng, shape_colors().size())];
    (void)color_name;

    RasterImage img = base_canvas(config.image_w, config.image_h);
    const int r = config.image_h / 4 + static_cast<int>(bounded_uniform(rng, 4));
    const int cx = config.image_w / 2 +
                   static_cast<int>(bounded_uniform(rng, 9)) - 4;
    const int cy = config.image_h / 2 + static_cast<int>(bounded_uniform(rng, 9)) - 4;
    draw_shape(img, shape, cx, cy, r, paint);
    stamp_index(img, stamp++);

    std::vector<std::string> options = {shape};
    for (std::size_t k = 1; options.size() < 4; ++k) {
      options.push_back(shape_names()[(shape_idx + k) % shape_names().size()]);
    }
    auto [choices, truth] = letter_choices(options, 0, rng);

    BaseItem item;
    item.id = id;
    item.task = TaskKind::Object;
    item.image_path = save_image(id, img);
    item.question = "What object is shown in the image?";
    item.choices = std::move(choices);
    item.ground_truth_letter = truth;
    if (i % 2 == 0) {
      for (const std::string& other : shape_names()) {
        if (other != shape) {
          item.typo_pool.push_back(other);
        }
      }
    }
    items.push_back(std::move(item));
  }

  // Attribute: the color of the drawn shape is the answer; choices are
  // color words, so default-pool overlays can collide with a choice.
  for (int i = 0; i < config.attributes; ++i) {
    SplitMix64 rng(derive_stream_seed(config.seed, "synth-attr-" + std::to_string(i)));
    const std::string id = item_id("attr", i);
    const std::size_t color_idx = bounded_uniform(rng, shape_colors().size());
    const auto& [color_name, paint] = shape_colors()[color_idx];
    const std::string& shape = shape_names()[bounded_uniform(rng, shape_names().size())];

    RasterImage img = base_canvas(config.image_w, config.image_h);
    draw_shape(img, shape, config.image_w / 2, config.image_h / 2, config.image_h / 3, paint);
    stamp_index(img, stamp++);

    std::vector<std::string> options = {color_name};
    for (std::size_t k = 1; options.size() < 4; ++k) {
      options.push_back(shape_colors()[(color_idx + k) % shape_colors().size()].first);
    }
    auto [choices, truth] = letter_choices(options, 0, rng);

    BaseItem item;
    item.id = id;
    item.task = TaskKind::Attribute;
    item.image_path = save_image(id, img);
    item.question = "What color is the " + shape + " in the image?";
    item.choices = std::move(choices);
    item.ground_truth_letter = truth;
    items.push_back(std::move(item));
  }

  // Enumeration: count the dots.
  for (int i = 0; i < config.enumerations; ++i) {
    SplitMix64 rng(derive_stream_seed(config.seed, "synth-enum-" + std::to_string(i)));
    const std::string id = item_id("enum", i);
    const int count = 1 + static_cast<int>(bounded_uniform(rng, 9));

    RasterImage img = base_canvas(config.image_w, config.image_h);
    const Paint dot{50, 50, 60};
    const int cols = 3;
    const int step_x = config.image_w / (cols + 1);
    const int step_y = config.image_h / 4;
    for (int d = 0; d < count; ++d) {
      const int gx = d % cols;
      const int gy = d / cols;
      fill_circle(img, step_x * (gx + 1), step_y * (gy + 1) + 2, config.image_h / 14 + 2, dot);
    }
    stamp_index(img, stamp++);

    std::vector<std::string> options = {std::to_string(count)};
    std::vector<int> offsets = {1, -1, 2, -2, 3, -3};
    for (std::size_t k = 0; options.size() < 4 && k < offsets.size(); ++k) {
      const int value = count + offsets[k];
      if (value >= 1 && value <= 12) {
        options.push_back(std::to_string(value));
      }
    }
    auto [choices, truth] = letter_choices(options, 0, rng);

    BaseItem item;
    item.id = id;
    item.task = TaskKind::Enumeration;
    item.image_path = save_image(id, img);
    item.question = "How many dots are in the image?";
    item.choices = std::move(choices);
    item.ground_truth_letter = truth;
    items.push_back(std::move(item));
  }

  // Reasoning: text-only commonsense questions over a neutral image; the
  // default overlay pool (the other choices) applies.
  for (int i = 0; i < config.reasonings; ++i) {
    SplitMix64 rng(derive_stream_seed(config.seed, "synth-rea-" + std::to_string(i)));
    const std::string id = item_id("rea", i);
    const QaEntry& qa = qa_bank()[static_cast<std::size_t>(i) % qa_bank().size()];

    RasterImage img = base_canvas(config.image_w, config.image_h);
    const auto& [stripe_name, paint] = shape_colors()[bounded_uniform(rng, shape_colors().size())];
    (void)stripe_name;
    for (int y = 0; y < config.image_h; y += 8) {
      fill_rect(img, 0, y, config.image_w, y + 4, paint);
    }
    stamp_index(img, stamp++);

    std::vector<std::string> options(qa.options, qa.options + 4);
    auto [choices, truth] =
        letter_choices(options, static_cast<std::size_t>(qa.answer), rng);

    BaseItem item;
    item.id = id;
    item.task = TaskKind::Reasoning;
    item.image_path = save_image(id, img);
    item.question = qa.question;
    item.choices = std::move(choices);
    item.ground_truth_letter = truth;
    items.push_back(std::move(item));
  }

  // Arithmetic: the expression itself is printed into the base image.
  for (int i = 0; i < config.arithmetics; ++i) {
    SplitMix64 rng(derive_stream_seed(config.seed, "synth-ari-" + std::to_string(i)));
    const std::string id = item_id("ari", i);
    const bool addition = bounded_uniform(rng, 2) == 0;
    int a, b, result;
    if (addition) {
      a = 3 + static_cast<int>(bounded_uniform(rng, 27));
      b = 3 + static_cast<int>(bounded_uniform(rng, 27));
      result = a + b;
    } else {
      a = 10 + static_cast<int>(bounded_uniform(rng, 30));
      b = 1 + static_cast<int>(bounded_uniform(rng, a - 5));
      result = a - b;
    }
    const std::string expression =
        std::to_string(a) + (addition ? " + " : " - ") + std::to_string(b) + " =";

    // Wider canvas so the printed expression fits comfortably.
    const int w = std::max(config.image_w, 96);
    const int h = config.image_h;
    RasterImage img = base_canvas(w, h);
    const GlyphBitmap text = font->rasterize(expression, 12);
    const Anchor anchor = anchor_in_cell(w, h, text.width, text.height, GridCell{2, 2});
    composite_into(img, text, RgbColor{"ink", 30, 30, 30}, 100, anchor);
    stamp_index(img, stamp++);

    std::vector<std::string> options = {std::to_string(result)};
    const int offsets[] = {1, -1, 2, -2, 3};
    for (std::size_t k = 0; options.size() < 4; ++k) {
      options.push_back(std::to_string(result + offsets[k % 5] * (1 + static_cast<int>(k / 5))));
    }
    auto [choices, truth] = letter_choices(options, 0, rng);

    BaseItem item;
    item.id = id;
    item.task = TaskKind::Arithmetic;
    item.image_path = save_image(id, img);
    item.question = "What is the result of the arithmetic expression shown in the image?";
    item.choices = std::move(choices);
    item.ground_truth_letter = truth;
    items.push_back(std::move(item));
  }

  const std::filesystem::path corpus_path = config.out_dir / "corpus.jsonl";
  save_corpus(corpus_path, items);
  return corpus_path;
}

}  // namespace typobench
