// Copyright (c) 2026 readkit authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "readkit/assets.hpp"

#include <fstream>
#include <sstream>

#include "readkit/errors.hpp"

namespace readkit {

const std::vector<std::string>& ml_term_lexicon() {
    static const std::vector<std::string> terms = {
        "gradient descent",
        "neural network",
        "support vector machine",
        "random forest",
        "logistic regression",
        "linear regression",
        "decision tree",
        "deep learning",
        "machine learning",
        "reinforcement learning",
        "supervised learning",
        "unsupervised learning",
        "transfer learning",
        "active learning",
        "feature engineering",
        "feature selection",
        "dimensionality reduction",
        "principal component analysis",
        "stochastic gradient descent",
        "batch normalization",
        "dropout regularization",
        "convolutional neural network",
        "recurrent neural network",
        "long short term memory",
        "attention mechanism",
        "transformer architecture",
        "language model",
        "word embedding",
        "tokenization",
        "backpropagation",
        "learning rate",
        "loss function",
        "cross entropy",
        "mean squared error",
        "overfitting",
        "underfitting",
        "regularization",
        "hyperparameter tuning",
        "grid search",
        "cross validation",
        "training set",
        "validation set",
        "test set",
        "data augmentation",
        "gradient clipping",
        "weight decay",
        "momentum",
        "adam optimizer",
        "k nearest neighbors",
        "naive bayes",
        "hidden markov model",
        "expectation maximization",
        "gaussian mixture model",
        "anomaly detection",
        "ensemble methods",
        "boosting",
        "bagging",
        "generative adversarial network",
        "variational autoencoder",
        "self supervised learning",
        "contrastive learning",
        "knowledge distillation",
        "model compression",
        "quantization",
        "pruning",
        "semantic segmentation",
        "object detection",
        "image classification",
        "speech recognition",
        "question answering",
        "sentiment analysis",
        "named entity recognition",
        "sequence labeling",
        "beam search",
        "greedy decoding",
        "zero shot learning",
        "few shot learning",
        "meta learning",
        "curriculum learning",
        "model calibration",
    };
    return terms;
}

namespace {

// Repository-authored prose, long enough that a 400-word contiguous run
// never wraps.
const char* const kProse =
    "The river began as a thin silver thread high on the northern slope, where melting snow "
    "slipped between dark stones and gathered in shallow pools that mirrored the pale sky. "
    "From there it fell quickly, cutting narrow channels through beds of gravel and moss, "
    "and by the time it reached the first stand of pines it had grown loud enough to be "
    "heard from the ridge above. Travelers who followed the old path along its bank learned "
    "to measure their progress by the sound of the water, which softened wherever the valley "
    "widened and sharpened again at every narrow turn. In spring the current carried broken "
    "branches and petals from the orchards upstream, and in autumn it carried leaves the "
    "color of copper and flame. The villagers built their first mill where the river bent "
    "around a shoulder of granite, and the wheel turned steadily for a hundred years, "
    "grinding grain for every farm within a day's walk. Children raced paper boats under "
    "the wooden bridge, wagers were settled on which arch a boat would choose, and on warm "
    "evenings the miller's dog slept on the steps with one ear raised toward the weir. "
    "Beyond the village the land flattened into meadows where herons stood motionless in "
    "the shallows and dragonflies stitched bright lines above the reeds. Farmers cut hay in "
    "long even rows and stacked it in round towers that dried slowly in the late sun. When "
    "the first frost arrived the meadows turned stiff and silver, and the river ran black "
    "and quiet between white banks, patient as a ledger keeping count of the seasons. "
    "Winter never fully closed it, for the springs that fed the channel rose warm from deep "
    "rock, and even in the coldest month a ribbon of open water remained, visited by ducks "
    "whose tracks wrote short sentences in the snow. The mapmakers came later, with brass "
    "instruments and notebooks bound in green cloth, and they argued pleasantly about where "
    "the river truly ended and the estuary began. One drew the boundary at the last bridge, "
    "another at the first taste of salt, and the innkeeper who fed them both observed that "
    "a river is finished only when it forgets its own name. Their charts, printed in three "
    "cities, showed the same blue line growing wider and calmer as it approached the coast, "
    "passing lighthouses and salt barns and a shipyard whose hammers rang like bells. At "
    "the mouth the water spread into a broad bright sheet, dotted with sails and the slow "
    "shadows of clouds, and fishermen reading the tide could tell from its color whether "
    "rain had fallen in the far mountains two days before. What began as snow on a silent "
    "slope ended as light on a moving sea, and the people who lived along its length, "
    "millers and mapmakers and children with paper boats, each knew a different river and "
    "were each entirely correct.";

} // namespace

const std::vector<std::string>& prose_corpus() {
    static const std::vector<std::string> words = [] {
        std::vector<std::string> out;
        std::istringstream in(kProse);
        std::string w;
        while (in >> w) {
            out.push_back(w);
        }
        return out;
    }();
    return words;
}

std::vector<std::string> load_phrase_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open phrase file: " + path);
    }
    std::vector<std::string> phrases;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty()) {
            phrases.push_back(line);
        }
    }
    return phrases;
}

} // namespace readkit
