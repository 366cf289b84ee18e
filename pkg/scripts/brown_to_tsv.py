"""Convert NLTK's copy of the Brown corpus to the labeled-sentence format.

Each output line is ``<category>\\t<space separated tokens>``. Pass the result
to ``virality train-news`` (editorial sentences are dropped there by default),
or point VIRALITY_BROWN_TSV at it to enable the Brown acceptance test.

Requires ``pip install nltk`` and ``python -m nltk.downloader brown``.
"""

import click


@click.command()
@click.option("-o", "--out", type=click.File("w", encoding="utf-8"), default="-")
def convert(out):
    from nltk.corpus import brown

    counts = {}
    for category in brown.categories():
        for sentence in brown.sents(categories=category):
            out.write(f"{category}\t{' '.join(sentence)}\n")
            counts[category] = counts.get(category, 0) + 1
    for category in sorted(counts):
        click.echo(f"{category}\t{counts[category]}", err=True)


if __name__ == "__main__":
    convert()
