from fractions import Fraction
from typing import Annotated

from pydantic import PlainSerializer


def format_exact(value: Fraction | int) -> str:
    """Renders a rational as `num/den` in lowest terms; integers keep their `/1` so no score ever reads as a decimal."""
    value = Fraction(value)
    return f'{value.numerator}/{value.denominator}'


def parse_exact(text: str) -> Fraction:
    numerator, slash, denominator = text.partition('/')
    if not slash:
        raise ValueError(f'Expected an exact rational of the form `num/den`, got {text!r}.')

    return Fraction(int(numerator), int(denominator))


ExactRational = Annotated[Fraction, PlainSerializer(format_exact, return_type=str)]
