"""Provide the XmlMixin class."""

from collections import defaultdict
from os import PathLike
from typing import Any

import lxml.etree as ET  # type: ignore

from pyphonon.exceptions import BaseException


class XmlMixin:
    """XML mixin supports reading and writing pyphonon's structured-text files."""

    #: raised for unreadable files; subclasses narrow it
    parse_error: type[BaseException] = BaseException

    def dict_to_etree(self, tag: str, values: dict[str, Any]) -> ET._Element:
        """Build an element from a dictionary.

        Keys starting with ``@`` become attributes, the ``text`` key becomes the
        element text and every other key becomes a child element.
        """
        element = ET.Element(tag)
        for key, value in values.items():
            if key.startswith("@"):
                element.set(key[1:], str(value))
            elif key == "text":
                element.text = str(value)
            elif isinstance(value, dict):
                element.append(self.dict_to_etree(key, value))
            else:
                child = ET.SubElement(element, key)
                child.text = str(value)
        return element

    def etree_to_dict(self, element: ET._Element) -> dict[str, Any]:
        """Parse XML Element to dictionary."""
        from_etree: dict[str, dict[str, Any] | Any] = {
            element.tag: {} if element.attrib else None
        }
        children = list(element)
        if children:
            parsed_children = defaultdict(list)
            for child in map(self.etree_to_dict, children):
                for key, value in child.items():
                    parsed_children[key].append(value)
            from_etree = {
                element.tag: {
                    key: value[0] if len(value) == 1 else value
                    for key, value in parsed_children.items()
                }
            }
        if element.attrib:
            from_etree[element.tag].update(
                (f"@{key}", value) for key, value in element.attrib.items()
            )
        if element.text:
            text = element.text.strip()
            if children or element.attrib:
                if text:
                    from_etree[element.tag]["text"] = text
            else:
                from_etree[element.tag] = text
        return from_etree

    def read_xml(self, path: str | PathLike) -> dict[str, Any]:
        try:
            root = ET.parse(str(path)).getroot()
        except (OSError, ET.XMLSyntaxError) as error:
            raise self.parse_error(f"{path}: {error}") from error
        return self.etree_to_dict(root)

    def write_xml(self, root: ET._Element, path: str | PathLike) -> None:
        ET.ElementTree(root).write(
            str(path), encoding="utf-8", xml_declaration=True, pretty_print=True
        )
