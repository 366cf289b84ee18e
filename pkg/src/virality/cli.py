"""Command line interface.

Exit codes: 0 success, 1 usage/config error, 2 data error, 3 numerical
failure (non-convergence or separation).
"""

from __future__ import annotations

import logging
import sys

import click

from virality import news, synth
from virality.corpus_io import dump_labeled_corpus, dump_tweets, load_labeled_corpus, load_tweets
from virality.errors import ConfigError, ConvergenceError, DataError
from virality.features import COVARIATES, TSV_COLUMNS, extract, format_tsv_row
from virality.lexicons import (
    SENTIMENT_RANGE,
    bundled_path,
    load_lexicon,
    load_stopwords,
)
from virality.pipeline import AnalysisConfig, repeated_accuracy, run_analysis, train_news_model
from virality.report import emit_report
from virality.sentiment import NegativePolicy, negative_flag, score
from virality.tokenizer import tokenize, vectorize

EXIT_CONFIG = 1
EXIT_DATA = 2
EXIT_NUMERICAL = 3

DEFAULT_FEATURE_BETA = (-2.0, 0.5, 0.0, -0.8, 1.0, 0.0)

seed_option = click.option("--seed", type=int, default=0, show_default=True, help="Random seed.")
stopwords_option = click.option(
    "--stopwords", type=click.Path(exists=True, dir_okay=False), help="Stopword file (default: bundled list)."
)
sentiment_option = click.option(
    "--sentiment-lexicon",
    type=click.Path(exists=True, dir_okay=False),
    help="word<TAB>score valence list in [-5, 5] (default: bundled sample).",
)
policy_option = click.option(
    "--negative-policy",
    type=click.Choice([p.value for p in NegativePolicy]),
    default="valence",
    show_default=True,
    help="valence: valence < 0; word: any negatively scored word.",
)


def _sentiment_lexicon(path):
    return load_lexicon(path or bundled_path("sentiment_sample.tsv"), *SENTIMENT_RANGE)


def _stopwords(path):
    return load_stopwords(path or bundled_path("stopwords.txt"))


def _load_model(path):
    with open(path, encoding="utf-8") as fh:
        return news.load_model(fh)


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr.")
def cli(verbose):
    """Retweet virality analysis toolkit."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format="%(levelname)s %(message)s")


@cli.command("train-news")
@click.argument("labeled_corpus", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--out", type=click.Path(dir_okay=False), help="Write the trained model here.")
@stopwords_option
@click.option("--vocab-size", type=int, default=10_000, show_default=True)
@click.option("--split", type=float, default=0.75, show_default=True, help="Training fraction.")
@seed_option
@click.option("--alpha", type=float, default=1.0, show_default=True, help="Additive smoothing.")
@click.option("--repeats", type=int, default=1, show_default=True, help="Seeded splits to average accuracy over.")
@click.option("--news-category", default="news", show_default=True)
@click.option("--exclude", multiple=True, default=("editorial",), show_default=True, help="Category to drop.")
def train_news_cmd(labeled_corpus, out, stopwords, vocab_size, split, seed, alpha, repeats, news_category, exclude):
    """Train the news classifier and report holdout accuracy."""
    sentences = load_labeled_corpus(labeled_corpus, news_category, exclude)
    kwargs = dict(stopwords=_stopwords(stopwords), vocab_size=vocab_size, split=split, alpha=alpha)
    trained = train_news_model(sentences, seed=seed, **kwargs)
    if repeats > 1:
        mean, std, _ = repeated_accuracy(sentences, range(seed, seed + repeats), **kwargs)
    else:
        mean, std = trained.accuracy, 0.0
    n_news = sum(s.label == news.NEWS for s in sentences)
    click.echo(f"sentences\t{len(sentences)}")
    click.echo(f"news\t{n_news}")
    click.echo(f"other\t{len(sentences) - n_news}")
    click.echo(f"vocabulary\t{trained.model.D}")
    click.echo(f"accuracy_mean\t{mean:.4f}")
    click.echo(f"accuracy_std\t{std:.4f}")
    click.echo(f"repeats\t{repeats}")
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            news.save_model(trained.model, fh)


@cli.command()
@click.argument("tweets", type=click.Path(exists=True, dir_okay=False))
@click.option("-m", "--model", "model_path", required=True, type=click.Path(exists=True, dir_okay=False))
def classify(tweets, model_path):
    """Print p(news) per tweet and the news rate."""
    model = _load_model(model_path)
    probs = []
    click.echo("id\tp_news")
    for tweet in load_tweets(tweets):
        p = news.posterior(model, vectorize(tokenize(tweet.text), model.vocab))
        probs.append(p)
        click.echo(f"{tweet.id}\t{p!r}")
    click.echo(f"rate of news: {news.news_rate(probs):.3f}", err=True)


@cli.command()
@click.argument("tweets", type=click.Path(exists=True, dir_okay=False))
@sentiment_option
@policy_option
def sentiment(tweets, sentiment_lexicon, negative_policy):
    """Print valence, arousal and the negative flag per tweet."""
    lexicon = _sentiment_lexicon(sentiment_lexicon)
    click.echo("id\tvalence\tarousal\tnegative")
    for tweet in load_tweets(tweets):
        s = score(tokenize(tweet.text), lexicon)
        click.echo(f"{tweet.id}\t{s.valence}\t{s.arousal}\t{int(negative_flag(s, negative_policy))}")


@cli.command()
@click.argument("tweets", type=click.Path(exists=True, dir_okay=False))
@click.option("-m", "--model", "model_path", required=True, type=click.Path(exists=True, dir_okay=False))
@sentiment_option
@policy_option
@click.option("--interaction-mode", type=click.Choice(["product", "and"]), default="product", show_default=True)
def features(tweets, model_path, sentiment_lexicon, negative_policy, interaction_mode):
    """Dump the retweet-model covariates, one TSV row per tweet."""
    model = _load_model(model_path)
    lexicon = _sentiment_lexicon(sentiment_lexicon)
    click.echo("\t".join(TSV_COLUMNS))
    for tweet in load_tweets(tweets):
        tokens = tokenize(tweet.text)
        p = news.posterior(model, vectorize(tokens, model.vocab))
        fv = extract(tweet, score(tokens, lexicon), p, interaction_mode, negative_policy)
        click.echo(format_tsv_row(fv))


def _parse_bool(ctx, param, value):
    if isinstance(value, bool):
        return value
    lowered = value.lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise click.BadParameter(f"expected a boolean, got {value!r}")


@cli.command()
@click.argument("tweets", type=click.Path(exists=True, dir_okay=False))
@click.option("-m", "--model", "model_path", type=click.Path(exists=True, dir_okay=False), help="Trained news model.")
@click.option("--labeled-corpus", type=click.Path(exists=True, dir_okay=False), help="Train the news model from this corpus instead.")
@click.option("--english-lexicon", type=click.Path(exists=True, dir_okay=False))
@sentiment_option
@stopwords_option
@click.option("--vocab-size", type=int, default=10_000, show_default=True)
@click.option("--split", type=float, default=0.75, show_default=True)
@seed_option
@click.option("--alpha", type=float, default=1.0, show_default=True)
@policy_option
@click.option("--interaction-mode", type=click.Choice(["product", "and"]), default="product", show_default=True)
@click.option("--arousal-filter", is_flag=True, help="Add a block restricted to tweets with arousal > 0.")
@click.option("--require-declared-lang", default="true", callback=_parse_bool, show_default=True)
@click.option("--no-language-filter", is_flag=True, help="Skip englishness filtering ('All' column).")
@click.option("--covariates", default=",".join(COVARIATES), show_default=True, help="Comma-separated covariates.")
@click.option("--name", "corpus_name", help="Corpus name used in the report header.")
@click.option("--skip-malformed", is_flag=True, help="Skip malformed tweet lines instead of aborting.")
@click.option("--format", "fmt", type=click.Choice(["tsv", "json"]), default="tsv", show_default=True)
@click.option("-o", "--out", type=click.Path(dir_okay=False), help="Write the report here instead of stdout.")
def analyze(tweets, model_path, labeled_corpus, english_lexicon, sentiment_lexicon, stopwords, vocab_size,
            split, seed, alpha, negative_policy, interaction_mode, arousal_filter, require_declared_lang,
            no_language_filter, covariates, corpus_name, skip_malformed, fmt, out):
    """Run the full pipeline and print a Table-1 style report."""
    config = AnalysisConfig(
        corpus=tweets,
        corpus_name=corpus_name,
        english_lexicon=english_lexicon,
        sentiment_lexicon=sentiment_lexicon,
        stopwords=stopwords,
        news_model=model_path,
        labeled_corpus=labeled_corpus,
        vocab_size=vocab_size,
        split=split,
        seed=seed,
        alpha=alpha,
        negative_policy=negative_policy,
        interaction_mode=interaction_mode,
        require_declared=require_declared_lang,
        language_filter=not no_language_filter,
        arousal_filter=arousal_filter,
        covariates=tuple(c for c in covariates.split(",") if c),
        on_error="skip" if skip_malformed else "abort",
    )
    report = run_analysis(config)
    text = emit_report(report, fmt)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)
    if not report.converged:
        click.echo("error: a retweet model did not converge (possible separation)", err=True)
        sys.exit(EXIT_NUMERICAL)


@cli.command("synth")
@click.option("--kind", type=click.Choice(["features", "tweets", "labeled"]), default="features", show_default=True)
@click.option("-n", "--n", "n", type=int, default=1000, show_default=True)
@seed_option
@click.option("--beta", help="Comma-separated coefficients, intercept first "
              "(features: -2.0,0.5,0.0,-0.8,1.0,0.0; tweets: intercept, hashtag, mention, url, negative).")
@click.option("--marginals", help="Comma-separated presence probabilities (features kind).")
@click.option("--news-boost", type=float, default=0.0, show_default=True,
              help="Linear-predictor boost for negative news tweets (tweets kind).")
@click.option("-o", "--out", type=click.File("w", encoding="utf-8"), default="-")
def synth_cmd(kind, n, seed, beta, marginals, news_boost, out):
    """Generate synthetic data with known ground truth."""
    if kind == "labeled":
        n_news = max(1, n // 4)
        dump_labeled_corpus(synth.synth_labeled_corpus(n_news, n - n_news, seed), out)
        return
    try:
        coefs = [float(b) for b in beta.split(",")] if beta else None
        marg = [float(m) for m in marginals.split(",")] if marginals else None
    except ValueError:
        raise click.BadParameter("expected comma-separated numbers") from None
    if kind == "tweets":
        generated = synth.synth_tweets(n, seed, coefs or synth.DEFAULT_TWEET_BETA, news_boost=news_boost)
        dump_tweets((g.tweet for g in generated), out)
        return
    data = synth.synth_generate(coefs or DEFAULT_FEATURE_BETA, n, seed, marg)
    k = data.X.shape[1]
    out.write("\t".join(["id", "f0", *(f"x{j}" for j in range(1, k)), "retweet"]) + "\n")
    for i in range(n):
        row = [str(i)] + [str(int(v)) for v in data.X[i]] + [str(int(data.y[i]))]
        out.write("\t".join(row) + "\n")


def main(argv=None):
    try:
        cli.main(args=argv, prog_name="virality", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.Abort:
        click.echo("aborted", err=True)
        return EXIT_CONFIG
    except (click.ClickException, ConfigError) as exc:
        if isinstance(exc, click.ClickException):
            exc.show()
        else:
            click.echo(f"error: {exc}", err=True)
        return EXIT_CONFIG
    except DataError as exc:
        click.echo(f"data error: {exc}", err=True)
        return EXIT_DATA
    except ConvergenceError as exc:
        click.echo(f"numerical error: {exc}", err=True)
        return EXIT_NUMERICAL
    except SystemExit as exc:
        return exc.code
    return 0


if __name__ == "__main__":
    sys.exit(main())
