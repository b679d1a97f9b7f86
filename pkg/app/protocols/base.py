"""Base protocol interface for MCP communication."""

import json
import logging
from abc import ABC, abstractmethod
from typing import Any, Callable, Dict, List

from mcp.server import NotificationOptions, Server
from mcp.server.models import InitializationOptions
from mcp.types import TextContent, Tool

from app.core import VOrderToolkit

logger = logging.getLogger(__name__)

_BINDING_PROPERTIES = {
    "mode": {
        "type": "string",
        "enum": ["text", "ints"],
        "description": "text: one letter per character; ints: whitespace-separated integers >= 1"
    },
    "alphabet": {
        "type": "string",
        "description": "Optional explicit symbol order, smallest first"
    },
}


def _line_tool(name: str, description: str) -> Tool:
    return Tool(
        name=name,
        description=description,
        inputSchema={
            "type": "object",
            "properties": {
                "text": {"type": "string", "description": "The input string"},
                **_BINDING_PROPERTIES,
            },
            "required": ["text"]
        }
    )


class MCPProtocol(ABC):
    """Abstract base class for MCP protocol implementations.

    Subclasses only supply the transport; tool listing and dispatch are
    shared.
    """

    def __init__(self, server_name: str, server_version: str = "1.0.0"):
        """Initialize the protocol.

        Args:
            server_name: Name of the MCP server
            server_version: Version of the server
        """
        self.server_name = server_name
        self.server_version = server_version
        self.app = Server(server_name)

        # Register handlers
        self._register_handlers()

    def _register_handlers(self) -> None:
        """Register MCP protocol handlers."""

        @self.app.list_tools()
        async def handle_list_tools() -> List[Tool]:
            """List available tools."""
            return self.get_available_tools()

        @self.app.call_tool()
        async def handle_call_tool(tool_name: str, arguments: Dict[str, Any] | None):
            """Handle tool execution requests."""
            return await self.handle_tool_call(tool_name, arguments or {})

    def initialization_options(self) -> InitializationOptions:
        return InitializationOptions(
            server_name=self.server_name,
            server_version=self.server_version,
            capabilities=self.app.get_capabilities(
                notification_options=NotificationOptions(),
                experimental_capabilities={},
            ),
        )

    @abstractmethod
    async def run(self) -> None:
        """Run the protocol server.

        This method should start the server and handle incoming requests
        according to the specific protocol implementation.
        """
        pass

    def get_available_tools(self) -> List[Tool]:
        """Get the list of available tools.

        Returns:
            List of Tool objects representing available functionality
        """
        return [
            Tool(
                name="vorder_compare",
                description="Compare two strings in V-order; returns LT, EQ or GT with per-comparator verdicts",
                inputSchema={
                    "type": "object",
                    "properties": {
                        "x": {"type": "string", "description": "First string"},
                        "y": {"type": "string", "description": "Second string"},
                        **_BINDING_PROPERTIES,
                    },
                    "required": ["x", "y"]
                }
            ),
            _line_tool("vorder_factor", "Factor a string into V-words with their rightmost positions"),
            _line_tool("vorder_suffix_array", "Lex-extension suffix array of a string (1-based starts)"),
            _line_tool("vorder_bwt", "V-order Burrows-Wheeler transform and primary index of a string"),
        ]

    def _operations(self, toolkit: VOrderToolkit) -> Dict[str, Callable[[Dict[str, Any]], Dict[str, Any]]]:
        return {
            "vorder_compare": lambda arguments: toolkit.compare(str(arguments["x"]), str(arguments["y"])),
            "vorder_factor": lambda arguments: toolkit.factor(str(arguments["text"])),
            "vorder_suffix_array": lambda arguments: toolkit.suffix_array(str(arguments["text"])),
            "vorder_bwt": lambda arguments: toolkit.bwt(str(arguments["text"])),
        }

    async def handle_tool_call(self, name: str, arguments: Dict[str, Any]) -> List[TextContent]:
        """Handle a tool call request.

        Raises:
            ValueError: For unknown tools or missing arguments
            RuntimeError: If the operation itself fails
        """
        tools = {tool.name: tool for tool in self.get_available_tools()}
        if name not in tools:
            raise ValueError(f"Unknown tool: {name}")

        for required in tools[name].inputSchema["required"]:
            if arguments.get(required) is None:
                raise ValueError(f"{required} parameter is required")

        try:
            toolkit = VOrderToolkit(mode=arguments.get("mode") or "text", alphabet=arguments.get("alphabet"))
            payload = self._operations(toolkit)[name](arguments)
            return [TextContent(type="text", text=json.dumps(payload, sort_keys=True, ensure_ascii=False))]
        except Exception as exc:
            error_message = f"Error running {name}: {exc}"
            logger.error(error_message)
            raise RuntimeError(error_message) from exc
