// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <exception>

#include "CLI11.hpp"
#include "typobench/corpus.hpp"
#include "typobench/errors.hpp"
#include "typobench/jsonl.hpp"
#include "typobench/synth.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate a small self-contained base corpus for offline runs"};

  typobench::SynthConfig config;
  config.font_path = "assets/fonts/DejaVuSans.ttf";
  app.add_option("--out", config.out_dir, "Corpus output directory")->required();
  app.add_option("--seed", config.seed, "Corpus seed");
  app.add_option("--objects", config.objects, "Object recognition item count");
  app.add_option("--attributes", config.attributes, "Attribute item count");
  app.add_option("--enumerations", config.enumerations, "Counting item count");
  app.add_option("--reasonings", config.reasonings, "Commonsense QA item count");
  app.add_option("--arithmetics", config.arithmetics, "Arithmetic item count");
  app.add_option("--width", config.image_w, "Base image width");
  app.add_option("--height", config.image_h, "Base image height");
  app.add_option("--font", config.font_path, "Font used for arithmetic expressions");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::filesystem::path corpus_path = typobench::generate_corpus(config);
    const typobench::Corpus corpus = typobench::load_corpus(corpus_path);
    const typobench::Json summary{{"command", "synth"},
                                  {"corpus", corpus_path.string()},
                                  {"items", corpus.items.size()}};
    std::printf("%s\n", summary.dump().c_str());
  } catch (const typobench::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
