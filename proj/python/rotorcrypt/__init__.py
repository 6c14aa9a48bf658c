"""Rotor-machine image cipher with chaotic wiring and threshold key sharing."""

try:
    from rotorcrypt._rotorcrypt import (  # noqa: F401
        RotorcryptError,
        column_means,
        complete_permutation,
        decrypt_image,
        encrypt_image,
        entropy,
        henon_byte_sequence,
        histogram,
        keystream_from_wav,
        pixel_change_rate,
        reconstruct_key,
        split_key,
    )
except ImportError:  # in-tree build: extension sits next to the package
    from _rotorcrypt import (  # noqa: F401
        RotorcryptError,
        column_means,
        complete_permutation,
        decrypt_image,
        encrypt_image,
        entropy,
        henon_byte_sequence,
        histogram,
        keystream_from_wav,
        pixel_change_rate,
        reconstruct_key,
        split_key,
    )

__all__ = [
    "RotorcryptError",
    "column_means",
    "complete_permutation",
    "decrypt_image",
    "encrypt_image",
    "entropy",
    "henon_byte_sequence",
    "histogram",
    "keystream_from_wav",
    "pixel_change_rate",
    "reconstruct_key",
    "split_key",
]
