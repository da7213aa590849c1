"""
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from hashlib import sha256
from pathlib import Path
from typing import Union

# symscale
from symscale.exceptions import ChecksumError


def sha256_file(filepath: Union[Path, str], chunk_size: int = 1 << 20) -> str:
    h = sha256()
    with open(filepath, 'rb') as f:
        for chunk in iter(lambda: f.read(chunk_size), b''):
            h.update(chunk)
    return h.hexdigest()


def verify_sha256(
    filepath: Union[Path, str],
    checksum: str,
) -> None:
    """
    Args:
        filepath (Union[Path, str]):
            A filepath to verify.
        checksum (str):
            A hex-encoded sha256 digest.

    Raises:
        ChecksumError:
             Raised if the hashes do not match.
    """
    digest: str = sha256_file(filepath)
    if digest != checksum:
        raise ChecksumError(
            'SHA-256 checksum verification failed! '
            f'Received: {digest} '
            f'Expected: {checksum}'
        )
