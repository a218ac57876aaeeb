from __future__ import annotations

import pytest
from hypothesis import settings

from hairpin.oracle import HairpinInstance

from .utils import exponential, running, pumping_pair, regular_pair, single_word, star_l1


settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def running_instance() -> HairpinInstance:
	return running()


@pytest.fixture
def regular_instance() -> HairpinInstance:
	return regular_pair()


@pytest.fixture
def pumping_instance() -> HairpinInstance:
	return pumping_pair()


@pytest.fixture
def single_word_instance() -> HairpinInstance:
	return single_word()


@pytest.fixture
def star_instance() -> HairpinInstance:
	return star_l1()


@pytest.fixture
def exponential_instance() -> HairpinInstance:
	return exponential()
