/* stumpspeech - political-tweet sentiment classification pipeline.
 *
 * C API over the C++ core: opaque handles, integer status codes, and
 * per-thread error messages.  Every function returning ss_status sets the
 * calling thread's error message on failure (see ss_last_error) and leaves
 * all out-parameters untouched unless it returns SS_OK.
 *
 * Strings and arrays returned through out-parameters are heap-allocated and
 * must be released with ss_free.  Handles are released with their matching
 * *_free function; passing NULL to a *_free function is a no-op.
 */
#ifndef STUMPSPEECH_H
#define STUMPSPEECH_H

#include <stddef.h>
#include <stdint.h>

#if defined(SS_BUILDING_SHARED) && defined(__GNUC__)
#define SS_API __attribute__((visibility("default")))
#else
#define SS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Number of annotation classes; class codes run 1..SS_NUM_CLASSES. */
#define SS_NUM_CLASSES 8

typedef enum ss_status {
  SS_OK = 0,
  SS_ERR_IO = 1,       /* file could not be opened/read/written */
  SS_ERR_PARSE = 2,    /* file or JSON contents invalid for the format */
  SS_ERR_INVALID = 3,  /* bad argument (NULL handle, range, unknown name) */
  SS_ERR_STATE = 4,    /* arguments valid alone but inconsistent together */
  SS_ERR_INTERNAL = 5  /* unexpected failure */
} ss_status;

/* Library version as "major.minor.patch". Storage is static; do not free. */
SS_API const char* ss_version(void);

/* Message for the most recent failing call on this thread ("" after a
 * success).  Storage is thread-local; do not free. */
SS_API const char* ss_last_error(void);

/* Releases strings/arrays returned by the library. */
SS_API void ss_free(void* ptr);

typedef struct ss_corpus ss_corpus;     /* ordered labeled tweets */
typedef struct ss_tfidf ss_tfidf;       /* fitted n-gram TF-IDF vectorizer */
typedef struct ss_model ss_model;       /* trained classifier */

/* ------------------------------------------------------------------ corpus
 * `format` is "csv" (header id,text,label; RFC-4180 quoting) or "jsonl"
 * (one {"id","text","label"} object per line); labels are integers 1..8. */
SS_API ss_status ss_corpus_load(const char* path, const char* format,
                                ss_corpus** out);
SS_API ss_status ss_corpus_save(const ss_corpus* corpus, const char* path,
                                const char* format);

/* Deterministic synthetic corpus: exact per-class counts, texts drawn from
 * class-specific keyword pools plus shared noise, identical bytes per seed.
 * `counts` may be NULL for the reference distribution
 * (1034, 876, 294, 790, 37, 53, 623, 2353; total 6060). */
SS_API ss_status ss_corpus_synthetic(uint64_t seed,
                                     const uint32_t counts[SS_NUM_CLASSES],
                                     ss_corpus** out);

SS_API ss_status ss_corpus_size(const ss_corpus* corpus, size_t* out);

/* Tweet at `index`; id/text are ss_free-able copies. Any out-pointer may be
 * NULL to skip that field. */
SS_API ss_status ss_corpus_get(const ss_corpus* corpus, size_t index,
                               char** id, char** text, int* label);

/* Per-class tweet counts (index = class code - 1) and the total. */
SS_API ss_status ss_corpus_counts(const ss_corpus* corpus,
                                  int64_t counts[SS_NUM_CLASSES],
                                  int64_t* total);

/* Class/count/percent table as plain text (two-decimal percentages). */
SS_API ss_status ss_corpus_stats_text(const ss_corpus* corpus, char** out);

SS_API void ss_corpus_free(ss_corpus* corpus);

/* -------------------------------------------------------------- annotation
 * Collapses per-party stance judgements into one class code:
 * not relevant -> 7; no assertions -> 8; otherwise support beats oppose and
 * the lowest-numbered party wins among equals.  parties[i] is 1..3,
 * stances[i] is 0 (support) or 1 (oppose); arrays may be NULL when n == 0. */
SS_API ss_status ss_resolve_label(const int* parties, const int* stances,
                                  size_t n, int relevant, int* out_class);

/* Fraction of positions where two annotators agree; labels are codes 1..8. */
SS_API ss_status ss_agreement_rate(const int* labels_a, const int* labels_b,
                                   size_t n, double* out);

/* ---------------------------------------------------------------- cleaning
 * The deterministic tweet-cleaning pipeline (placeholders emailaddr, urladdr,
 * moneysymb, numbr; idempotent; lowercase single-spaced output). */
SS_API ss_status ss_normalize(const char* text, char** out);

/* Rewrites every text field of a corpus file through the cleaning pipeline;
 * input and output use the same format. */
SS_API ss_status ss_clean_file(const char* in_path, const char* out_path,
                               const char* format);

/* ---------------------------------------------------------------- features
 * Vectorizers clean input text themselves, so raw and pre-cleaned tweets
 * transform identically.  `order` is the n-gram order (1..4); terms seen in
 * fewer than `min_df` documents are dropped; non-zero `cumulative` unions
 * orders 1..order instead of using `order` alone. */
SS_API ss_status ss_tfidf_fit(const ss_corpus* corpus, uint32_t order,
                              uint32_t min_df, int cumulative, ss_tfidf** out);
SS_API ss_status ss_tfidf_save(const ss_tfidf* vectorizer, const char* path);
SS_API ss_status ss_tfidf_load(const char* path, ss_tfidf** out);
SS_API ss_status ss_tfidf_order(const ss_tfidf* vectorizer, uint32_t* out);
SS_API ss_status ss_tfidf_vocab_size(const ss_tfidf* vectorizer, size_t* out);

/* L2-normalised TF-IDF vector of one tweet as parallel index/weight arrays
 * (ss_free both).  `oov` (optional) receives the number of n-gram
 * occurrences missing from the vocabulary. */
SS_API ss_status ss_tfidf_transform(const ss_tfidf* vectorizer,
                                    const char* text, uint32_t** indices,
                                    double** weights, size_t* n, size_t* oov);
SS_API void ss_tfidf_free(ss_tfidf* vectorizer);

/* ---------------------------------------------------------------- training
 * `algorithm` is one of "naive_bayes", "logistic", "svm", "forest".
 * `options_json`, when non-NULL, is a flat JSON object of hyperparameters;
 * unknown keys are rejected.  Recognised keys (all optional):
 *   "seed"                       integer, default 42
 *   "alpha"                      naive_bayes smoothing, default 1.0
 *   "learning_rate","l2","logistic_epochs"   logistic (0.1, 1e-4, 200)
 *   "lambda","svm_epochs"                    svm (1e-4, 20)
 *   "trees","max_depth","min_leaf","mtry","threads"  forest
 *                                            (100, 20, 1, 0=auto, 0=auto)
 * Training uses the whole corpus; evaluation splits belong to experiments. */
SS_API ss_status ss_train(const ss_corpus* corpus, const ss_tfidf* vectorizer,
                          const char* algorithm, const char* options_json,
                          ss_model** out);

SS_API ss_status ss_model_save(const ss_model* model, const char* path);
SS_API ss_status ss_model_load(const char* path, ss_model** out);
/* Kind string stored in the model file: "naive_bayes", "logistic",
 * "svm_ovr", or "forest" (ss_free the result). */
SS_API ss_status ss_model_kind(const ss_model* model, char** out);
SS_API ss_status ss_model_dim(const ss_model* model, size_t* out);

/* Predicts one tweet.  `out_score` (optional) receives the winning class's
 * decision score (log-joint for naive bayes, w.x+b for linear models, vote
 * count for forests).  `out_all_oov` (optional) is 1 when every n-gram was
 * out of vocabulary, i.e. the prediction ran on a zero vector.  Fails with
 * SS_ERR_STATE when model and vectorizer dimensions differ. */
SS_API ss_status ss_predict(const ss_model* model, const ss_tfidf* vectorizer,
                            const char* text, int* out_class,
                            double* out_score, int* out_all_oov);

/* Labels a whole corpus file into a CSV `id,predicted_class,score,oov`. */
SS_API ss_status ss_predict_file(const ss_model* model,
                                 const ss_tfidf* vectorizer,
                                 const char* in_path, const char* format,
                                 const char* out_path);
SS_API void ss_model_free(ss_model* model);

/* -------------------------------------------------------------- evaluation
 * Support-weighted precision/recall/F1 over the 8-class universe; any
 * out-pointer may be NULL. */
SS_API ss_status ss_evaluate(const int* y_true, const int* y_pred, size_t n,
                             double* precision, double* recall, double* f1);

/* Runs the classifier x n-gram-order grid and writes <out_dir>/grid.csv
 * ("algorithm,order,precision,recall,f1,seconds") plus a plain-text table
 * <out_dir>/grid.txt.  `options_json` (optional, flat JSON object) accepts
 * every ss_train key plus:
 *   "algorithms"     array of algorithm names, default all four
 *   "orders"         array of integers 1..4, default [1,2,3,4]
 *   "test_fraction"  (0,1), default 0.2
 *   "min_df"         integer >= 1, default 1
 *   "cumulative"     boolean, default false
 * One stratified split is shared by all cells; cell training seeds are
 * seed + cell_index.  Reruns are byte-identical except the seconds column. */
SS_API ss_status ss_experiment_run(const ss_corpus* corpus,
                                   const char* options_json,
                                   const char* out_dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STUMPSPEECH_H */
