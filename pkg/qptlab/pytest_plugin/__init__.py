"""pytest插件模块 - 测试运行日志与 traceid"""
